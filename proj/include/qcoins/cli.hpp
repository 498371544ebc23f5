// Copyright 2026 The qcoins Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand prints one JSON document on
// stdout (render prints SVG unless --out is given).
//
// Exit codes: 0 success, 1 domain error (a value outside the domain of the
// operation), 2 usage error (bad flags, malformed JSON, missing fields).

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcoins/coinsim.hpp"
#include "qcoins/core.hpp"
#include "qcoins/error.hpp"
#include "qcoins/json_io.hpp"
#include "qcoins/observables.hpp"
#include "qcoins/suprematism.hpp"

namespace qcoins::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Overrides kDefaultSeed when set to an unsigned decimal integer.
inline constexpr const char* kSeedEnvVar = "QCOINS_SEED";

/// `arg` is inline JSON when it starts with '{' or '[', otherwise a path to
/// a UTF-8 JSON file. `field` names the argument in diagnostics.
inline Json load_payload(const std::string& arg, const std::string& field) {
  std::size_t i = 0;
  while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
  std::string text;
  if (i < arg.size() && (arg[i] == '{' || arg[i] == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw InputError(field, "cannot read file '" + arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(field, std::string("malformed JSON (") + e.what() + ")");
  }
}

template <class T>
T load_as(const std::string& arg, const std::string& field) {
  const Json j = load_payload(arg, field);
  T value{};
  try {
    from_json(j, value);
  } catch (const InputError& e) {
    throw InputError(field + "." + e.field(), std::string(e.what()).substr(e.field().size() + 2));
  }
  return value;
}

inline std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnvVar);
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  const std::string s(env);
  try {
    if (s.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(s);
    return std::stoull(s);
  } catch (const std::exception&) {
    throw InputError(kSeedEnvVar, "must be an unsigned decimal integer, got '" + s + "'");
  }
}

inline void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

/// Runs one invocation. `args[0]` is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qubit states as three classical-like coins", "qcoins"};
  app.require_subcommand(1, 1);

  std::string state_arg, other_arg, obs_arg, matrix_arg, out_path;
  std::string region = "cube";
  double scale = 100.0;
  double lambda = 1.0;
  std::size_t n_moments = 10;
  std::uint64_t n_tosses = 1000;
  std::uint64_t n_samples = 1000000;
  std::size_t count = 10;
  std::size_t grid = 50;
  std::size_t steps = 20;
  std::uint64_t stream = 0;
  std::optional<std::uint64_t> seed_opt;

  auto* validate = app.add_subcommand("validate", "Ball membership, eigenvalues and purity of a triple");
  validate->add_option("state", state_arg, "Probability triple (JSON or file)")->required();

  auto* to_density = app.add_subcommand("to-density", "Density matrix of a triple");
  to_density->add_option("state", state_arg, "Probability triple (JSON or file)")->required();

  auto* to_probs = app.add_subcommand("to-probs", "Probability triple of a density matrix");
  to_probs->add_option("matrix", matrix_arg, "Density matrix (JSON or file)")->required();

  auto* to_bloch = app.add_subcommand("to-bloch", "Bloch vector of a triple");
  to_bloch->add_option("state", state_arg, "Probability triple (JSON or file)")->required();

  auto* from_bloch = app.add_subcommand("from-bloch", "Probability triple of a Bloch vector");
  from_bloch->add_option("bloch", state_arg, "Bloch vector {x1,x2,x3} (JSON or file)")->required();

  auto* overlap_cmd = app.add_subcommand("overlap", "Tr(rho1 rho2) of two quantum states");
  overlap_cmd->add_option("state", state_arg, "First triple")->required();
  overlap_cmd->add_option("other", other_arg, "Second triple")->required();

  auto* area = app.add_subcommand("area", "Malevich square sides and summed area");
  area->add_option("state", state_arg, "Probability triple (JSON or file)")->required();

  auto* render = app.add_subcommand("render", "SVG drawing of the Malevich squares");
  render->add_option("state", state_arg, "Probability triple (JSON or file)")->required();
  render->add_option("--scale", scale, "Pixels per unit side length")->capture_default_str();
  render->add_option("--out", out_path, "Write SVG here instead of stdout");

  auto* moments_cmd = app.add_subcommand("moments", "Moments <A^n> for n = 0..N");
  moments_cmd->add_option("--state", state_arg, "Probability triple")->required();
  moments_cmd->add_option("--obs", obs_arg, "Game observable {x,y,z1,z2}")->required();
  moments_cmd->add_option("--n", n_moments, "Highest moment N")->capture_default_str();

  auto* genfun = app.add_subcommand("genfun", "Generating function Tr(rho exp(lambda A))");
  genfun->add_option("--state", state_arg, "Probability triple")->required();
  genfun->add_option("--obs", obs_arg, "Game observable {x,y,z1,z2}")->required();
  genfun->add_option("--lambda", lambda, "Argument lambda")->capture_default_str();

  auto* outcomes = app.add_subcommand("outcomes", "Outcome distribution of A in a quantum state");
  outcomes->add_option("--state", state_arg, "Probability triple")->required();
  outcomes->add_option("--obs", obs_arg, "Game observable {x,y,z1,z2}")->required();

  auto* simulate = app.add_subcommand("simulate", "Toss the three coins and estimate statistics");
  simulate->add_option("--state", state_arg, "Probability triple")->required();
  simulate->add_option("--obs", obs_arg, "Game observable {x,y,z1,z2}")->required();
  simulate->add_option("--n", n_tosses, "Tosses per coin")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Random triples from the cube, ball or sphere");
  sample->add_option("--region", region, "cube, ball or sphere")
      ->check(CLI::IsMember({"cube", "ball", "sphere"}))
      ->capture_default_str();
  sample->add_option("--count", count, "Number of triples")->capture_default_str();

  auto* max_area = app.add_subcommand("max-area", "Maximize the summed area over cube or ball");
  max_area->add_option("--region", region, "cube or ball")
      ->check(CLI::IsMember({"cube", "ball"}))
      ->capture_default_str();
  max_area->add_option("--grid", grid, "Grid points per axis (>= 10)")->capture_default_str();
  max_area->add_option("--steps", steps, "Refinement levels")->capture_default_str();

  auto* fraction = app.add_subcommand("quantum-fraction", "Fraction of the cube inside the quantum ball");
  fraction->add_option("--n", n_samples, "Cube samples (>= 1000)")->capture_default_str();

  for (CLI::App* sub : {simulate, sample, fraction}) {
    sub->add_option("--seed", seed_opt, std::string("Seed (default from ") + kSeedEnvVar + " or " +
                                            std::to_string(kDefaultSeed) + ")");
    sub->add_option("--stream", stream, "Independent stream index")->capture_default_str();
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  if (args.size() > 1 && !args[1].empty() && args[1][0] != '-') {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(),
                                   [&](const CLI::App* s) { return s->get_name() == args[1]; });
    if (!known) {
      err << "usage error: unknown subcommand '" << args[1] << "' (see --help)\n";
      return kExitUsage;
    }
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const auto rng_spec = [&] {
      RngSpec spec;
      spec.seed = seed_opt ? *seed_opt : default_seed();
      spec.stream = stream;
      return spec;
    };

    if (validate->parsed()) {
      print(out, Json(quantum_validity(load_as<ProbabilityTriple>(state_arg, "state"))));
    } else if (to_density->parsed()) {
      print(out, Json(probs_to_density(load_as<ProbabilityTriple>(state_arg, "state"))));
    } else if (to_probs->parsed()) {
      print(out, Json(density_to_probs(load_as<DensityMatrix>(matrix_arg, "matrix"))));
    } else if (to_bloch->parsed()) {
      print(out, Json(probs_to_bloch(load_as<ProbabilityTriple>(state_arg, "state"))));
    } else if (from_bloch->parsed()) {
      print(out, Json(bloch_to_probs(load_as<BlochVector>(state_arg, "bloch"))));
    } else if (overlap_cmd->parsed()) {
      const auto p = load_as<ProbabilityTriple>(state_arg, "state");
      const auto q = load_as<ProbabilityTriple>(other_arg, "other");
      print(out, Json{{"overlap", overlap(p, q)}});
    } else if (area->parsed()) {
      const auto p = load_as<ProbabilityTriple>(state_arg, "state");
      Json j = side_lengths(p);
      j["area_sum_closed_form"] = area_sum_closed_form(p);
      print(out, j);
    } else if (render->parsed()) {
      const auto triad = side_lengths(load_as<ProbabilityTriple>(state_arg, "state"));
      SvgStyle style;
      style.scale = scale;
      const std::string svg = render_svg(triad, style);
      if (out_path.empty()) {
        out << svg;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!(f << svg)) throw DomainError("out", "cannot write '" + out_path + "'");
        Json j = triad;
        j["out"] = out_path;
        j["bytes"] = svg.size();
        print(out, j);
      }
    } else if (moments_cmd->parsed()) {
      const auto p = load_as<ProbabilityTriple>(state_arg, "state");
      const auto a = load_as<GameObservable>(obs_arg, "obs");
      print(out, Json(moments(p, a, n_moments)));
    } else if (genfun->parsed()) {
      const auto p = load_as<ProbabilityTriple>(state_arg, "state");
      const auto a = load_as<GameObservable>(obs_arg, "obs");
      print(out, Json{{"lambda", lambda}, {"value", generating_function(p, a, lambda)}});
    } else if (outcomes->parsed()) {
      const auto p = load_as<ProbabilityTriple>(state_arg, "state");
      const auto a = load_as<GameObservable>(obs_arg, "obs");
      print(out, Json{{"outcomes", outcome_distribution(p, a)}});
    } else if (simulate->parsed()) {
      const auto p = load_as<ProbabilityTriple>(state_arg, "state");
      const auto a = load_as<GameObservable>(obs_arg, "obs");
      const RngSpec spec = rng_spec();
      const TossRecord rec = toss(p, n_tosses, spec);
      print(out, Json{{"rng", spec},
                      {"state", p},
                      {"observable", a},
                      {"record", rec},
                      {"stats", estimate(rec, a)},
                      {"exact_mean", mean(p, a)}});
    } else if (sample->parsed()) {
      const SampleRegion r = region == "ball"     ? SampleRegion::ball
                             : region == "sphere" ? SampleRegion::sphere
                                                  : SampleRegion::cube;
      const RngSpec spec = rng_spec();
      const SampleBatch batch = sample_states(r, count, spec);
      print(out, Json{{"rng", spec},
                      {"region", std::string(to_string(r))},
                      {"proposals", batch.proposals},
                      {"samples", batch.states}});
    } else if (max_area->parsed()) {
      const Region r = region == "ball" ? Region::ball : Region::cube;
      print(out, Json(maximize_area(r, grid, steps)));
    } else if (fraction->parsed()) {
      const RngSpec spec = rng_spec();
      print(out, Json{{"rng", spec}, {"n_samples", n_samples}, {"fraction", quantum_fraction(n_samples, spec)}});
    }
  } catch (const InputError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace qcoins::cli
