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

// JSON encoding of the library types. Schemas live in schema/.
//
// Keys are emitted in a fixed order. Doubles are written in the shortest
// form that parses back to the same value (at most 17 significant digits).

#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include <json.hpp>

#include "qcoins/coinsim.hpp"
#include "qcoins/core.hpp"
#include "qcoins/error.hpp"
#include "qcoins/observables.hpp"
#include "qcoins/suprematism.hpp"

namespace qcoins {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(key, "expected a JSON object containing this field");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(key, "missing field");
  return *it;
}

inline double require_number(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number()) throw InputError(key, "must be a number");
  return v.get<double>();
}

}  // namespace detail

inline void to_json(Json& j, const ProbabilityTriple& p) {
  j = Json{{"p1", p.p1}, {"p2", p.p2}, {"p3", p.p3}};
}

inline void from_json(const Json& j, ProbabilityTriple& p) {
  p.p1 = detail::require_number(j, "p1");
  p.p2 = detail::require_number(j, "p2");
  p.p3 = detail::require_number(j, "p3");
}

inline void to_json(Json& j, const BlochVector& x) {
  j = Json{{"x1", x.x1}, {"x2", x.x2}, {"x3", x.x3}};
}

inline void from_json(const Json& j, BlochVector& x) {
  x.x1 = detail::require_number(j, "x1");
  x.x2 = detail::require_number(j, "x2");
  x.x3 = detail::require_number(j, "x3");
}

inline void to_json(Json& j, const Matrix2& a) {
  Json m = Json::array();
  for (const Complex& z : a.m) m.push_back(Json::array({z.real(), z.imag()}));
  j = Json{{"m", std::move(m)}};
}

inline void from_json(const Json& j, Matrix2& a) {
  const Json& m = detail::require(j, "m");
  if (!m.is_array() || m.size() != 4) throw InputError("m", "expected 4 [re, im] pairs in row-major order");
  for (std::size_t i = 0; i < 4; ++i) {
    const Json& z = m[i];
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      throw InputError("m", "entry " + std::to_string(i) + " is not a [re, im] pair of numbers");
    }
    a.m[i] = Complex{z[0].get<double>(), z[1].get<double>()};
  }
}

inline void to_json(Json& j, const DensityMatrix& rho) { to_json(j, rho.matrix()); }

inline void from_json(const Json& j, DensityMatrix& rho) {
  Matrix2 a;
  from_json(j, a);
  rho = DensityMatrix::from_matrix(a);
}

inline void to_json(Json& j, const ValidityReport& r) {
  j = Json{{"radius_squared", r.radius_squared},
           {"is_quantum", r.is_quantum},
           {"eigenvalues", Json::array({r.eigenvalues[0], r.eigenvalues[1]})},
           {"purity_defect", r.purity_defect}};
}

inline void to_json(Json& j, const GameObservable& a) {
  j = Json{{"x", a.x}, {"y", a.y}, {"z1", a.z1}, {"z2", a.z2}};
}

inline void from_json(const Json& j, GameObservable& a) {
  a.x = detail::require_number(j, "x");
  a.y = detail::require_number(j, "y");
  a.z1 = detail::require_number(j, "z1");
  a.z2 = detail::require_number(j, "z2");
}

inline void to_json(Json& j, const MalevichTriad& t) {
  j = Json{{"sides", Json::array({t.sides[0], t.sides[1], t.sides[2]})}, {"area_sum", t.area_sum}};
}

inline void to_json(Json& j, const ExtremizationResult& r) {
  j = Json{{"region", std::string(to_string(r.region))},
           {"best_p", r.best_p},
           {"best_value", r.best_value},
           {"iterations", r.iterations}};
}

inline void to_json(Json& j, const MomentSequence& s) {
  j = Json{{"moments", s.moments}, {"c", s.c}, {"r", s.r}};
  j["f"] = s.f ? Json(*s.f) : Json(nullptr);
}

inline void to_json(Json& j, const Outcome& o) {
  j = Json{{"value", o.value}, {"probability", o.probability}};
}

inline void to_json(Json& j, const RngSpec& s) {
  j = Json{{"seed", s.seed}, {"algorithm", s.algorithm}, {"stream", s.stream}};
}

inline void to_json(Json& j, const TossRecord& r) {
  j = Json{{"n_tosses", r.n_tosses}, {"heads_counts", r.heads_counts}};
}

inline void from_json(const Json& j, TossRecord& r) {
  const Json& n = detail::require(j, "n_tosses");
  if (!n.is_number_unsigned()) throw InputError("n_tosses", "must be a non-negative integer");
  r.n_tosses = n.get<std::uint64_t>();
  const Json& h = detail::require(j, "heads_counts");
  if (!h.is_array() || h.size() != 3) throw InputError("heads_counts", "expected three counts");
  for (std::size_t k = 0; k < 3; ++k) {
    if (!h[k].is_number_unsigned()) throw InputError("heads_counts", "counts must be non-negative integers");
    r.heads_counts[k] = h[k].get<std::uint64_t>();
  }
}

inline void to_json(Json& j, const SampleStats& s) {
  j = Json{{"p_hat", s.p_hat},
           {"mean_X", s.mean_X},
           {"mean_Y", s.mean_Y},
           {"mean_Z", s.mean_Z},
           {"empirical_mean", s.empirical_mean()},
           {"stderr", s.std_error}};
}

}  // namespace qcoins
