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

// Monte Carlo coin tossing.
//
// The three coins are always tossed independently. Quantum correlations
// restrict which probability triples are admissible (the ball), they do not
// couple the outcomes of individual tosses.
//
// All randomness comes from xoshiro256** seeded through splitmix64 and is
// consumed in a fixed order, so a given RngSpec reproduces the same bits on
// every platform. The standard <random> distributions are not used because
// their output is implementation-defined.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "qcoins/core.hpp"
#include "qcoins/error.hpp"
#include "qcoins/observables.hpp"

namespace qcoins {

inline constexpr std::uint64_t kDefaultSeed = 20190807;
inline constexpr const char* kXoshiroAlgorithm = "xoshiro256**";

/// splitmix64 step; used to expand a 64-bit seed into generator state.
constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** 1.0 (Blackman & Vigna). Satisfies UniformRandomBitGenerator.
class Xoshiro256StarStar {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256StarStar(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  /// Raw state, for reproducing published reference sequences.
  static constexpr Xoshiro256StarStar from_state(const std::array<std::uint64_t, 4>& state) {
    Xoshiro256StarStar g(0);
    g.s_ = state;
    return g;
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Advances by 2^128 draws; successive jumps give non-overlapping streams.
  constexpr void jump() {
    constexpr std::array<std::uint64_t, 4> kJump{0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL,
                                                 0xa9582618e03fc9aaULL, 0x39abdc4529b1661cULL};
    std::array<std::uint64_t, 4> acc{};
    for (const std::uint64_t word : kJump) {
      for (int b = 0; b < 64; ++b) {
        if (word & (std::uint64_t{1} << b)) {
          for (std::size_t i = 0; i < 4; ++i) acc[i] ^= s_[i];
        }
        (*this)();
      }
    }
    s_ = acc;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> s_{};
};

/// Identifies a random stream: seed, generator name and stream index
/// (the number of jump() calls applied after seeding).
struct RngSpec {
  std::uint64_t seed = kDefaultSeed;
  std::string algorithm = kXoshiroAlgorithm;
  std::uint64_t stream = 0;

  /// The same seed on an independent stream.
  RngSpec substream(std::uint64_t index) const { return RngSpec{seed, algorithm, index}; }

  friend bool operator==(const RngSpec&, const RngSpec&) = default;
};

inline Xoshiro256StarStar make_rng(const RngSpec& spec) {
  if (spec.algorithm != kXoshiroAlgorithm) {
    throw DomainError("algorithm", "unsupported generator '" + spec.algorithm + "'");
  }
  Xoshiro256StarStar g(spec.seed);
  for (std::uint64_t i = 0; i < spec.stream; ++i) g.jump();
  return g;
}

struct TossRecord {
  std::uint64_t n_tosses = 0;
  std::array<std::uint64_t, 3> heads_counts{};

  friend bool operator==(const TossRecord&, const TossRecord&) = default;
};

struct SampleStats {
  ProbabilityTriple p_hat;
  double mean_X = 0.0;
  double mean_Y = 0.0;
  double mean_Z = 0.0;
  /// sqrt(p_hat_k (1 - p_hat_k) / n) per coin.
  std::array<double, 3> std_error{};

  /// Empirical <A> = <X> + <Y> + <Z>.
  double empirical_mean() const { return mean_X + mean_Y + mean_Z; }
};

/// Tosses each coin n times: all of coin 1 first, then coin 2, then coin 3.
inline TossRecord toss(const ProbabilityTriple& p, std::uint64_t n, Xoshiro256StarStar& rng) {
  check_in_cube(p);
  if (n == 0) throw DomainError("n", "at least one toss is required");
  TossRecord rec;
  rec.n_tosses = n;
  for (std::size_t k = 0; k < 3; ++k) {
    const double pk = p[k];
    std::uint64_t heads = 0;
    for (std::uint64_t i = 0; i < n; ++i) heads += rng.uniform() < pk ? 1 : 0;
    rec.heads_counts[k] = heads;
  }
  return rec;
}

inline TossRecord toss(const ProbabilityTriple& p, std::uint64_t n, const RngSpec& spec) {
  auto rng = make_rng(spec);
  return toss(p, n, rng);
}

inline SampleStats estimate(const TossRecord& record, const GameObservable& a) {
  if (record.n_tosses == 0) throw DomainError("n_tosses", "record holds no tosses");
  const double n = static_cast<double>(record.n_tosses);
  std::array<double, 3> ph{};
  SampleStats s;
  for (std::size_t k = 0; k < 3; ++k) {
    if (record.heads_counts[k] > record.n_tosses) {
      throw DomainError("heads_counts", "more heads than tosses for coin " + std::to_string(k + 1));
    }
    ph[k] = static_cast<double>(record.heads_counts[k]) / n;
    s.std_error[k] = std::sqrt(ph[k] * (1.0 - ph[k]) / n);
  }
  s.p_hat = {ph[0], ph[1], ph[2]};
  // + 0.0 folds -0.0 into +0.0 so serialized output has no signed zeros.
  s.mean_X = (2.0 * ph[0] - 1.0) * a.x + 0.0;
  s.mean_Y = (2.0 * ph[1] - 1.0) * a.y + 0.0;
  s.mean_Z = ph[2] * a.z1 + (1.0 - ph[2]) * a.z2 + 0.0;
  return s;
}

enum class SampleRegion { cube, ball, sphere };

inline constexpr std::string_view to_string(SampleRegion r) {
  switch (r) {
    case SampleRegion::cube: return "cube";
    case SampleRegion::ball: return "ball";
    case SampleRegion::sphere: return "sphere";
  }
  return "?";
}

struct SampleBatch {
  std::vector<ProbabilityTriple> states;
  /// Cube points drawn; exceeds states.size() only for rejection sampling.
  std::uint64_t proposals = 0;
};

/// One triple from `region`. Ball: rejection from the cube. Sphere: a
/// uniform direction (z uniform in [-1,1], azimuth uniform) at radius 1/2.
inline ProbabilityTriple sample_state(SampleRegion region, Xoshiro256StarStar& rng,
                                      std::uint64_t* proposals = nullptr) {
  switch (region) {
    case SampleRegion::cube:
    case SampleRegion::ball:
      for (;;) {
        const double a = rng.uniform();
        const double b = rng.uniform();
        const double c = rng.uniform();
        if (proposals) ++*proposals;
        const ProbabilityTriple p{a, b, c};
        if (region == SampleRegion::cube || radius_squared(p) <= 0.25) return p;
      }
    case SampleRegion::sphere: {
      const double z = 2.0 * rng.uniform() - 1.0;
      const double phi = 2.0 * std::numbers::pi * rng.uniform();
      const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
      if (proposals) ++*proposals;
      return {0.5 + 0.5 * s * std::cos(phi), 0.5 + 0.5 * s * std::sin(phi), 0.5 + 0.5 * z};
    }
  }
  return {};
}

inline ProbabilityTriple sample_state(SampleRegion region, const RngSpec& spec) {
  auto rng = make_rng(spec);
  return sample_state(region, rng);
}

inline SampleBatch sample_states(SampleRegion region, std::size_t count, const RngSpec& spec) {
  auto rng = make_rng(spec);
  SampleBatch batch;
  batch.states.reserve(count);
  for (std::size_t i = 0; i < count; ++i) batch.states.push_back(sample_state(region, rng, &batch.proposals));
  return batch;
}

/// Fraction of uniform cube triples that are quantum states; tends to
/// pi/6, the ball-to-cube volume ratio.
inline double quantum_fraction(std::uint64_t n_samples, const RngSpec& spec) {
  if (n_samples < 1000) throw DomainError("n_samples", "at least 1000 samples are required");
  auto rng = make_rng(spec);
  std::uint64_t inside = 0;
  for (std::uint64_t i = 0; i < n_samples; ++i) {
    const double a = rng.uniform();
    const double b = rng.uniform();
    const double c = rng.uniform();
    if (radius_squared({a, b, c}) <= 0.25 + kValidityTolerance) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(n_samples);
}

}  // namespace qcoins
