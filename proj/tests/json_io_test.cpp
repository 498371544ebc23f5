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

#include "qcoins/json_io.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cstdint>
#include <random>

using namespace qcoins;

TEST(JsonIo, TripleRoundTripIsBitExact) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const ProbabilityTriple p{u(rng), u(rng), u(rng)};
    const auto back = Json::parse(Json(p).dump()).get<ProbabilityTriple>();
    EXPECT_EQ(std::bit_cast<std::uint64_t>(back.p1), std::bit_cast<std::uint64_t>(p.p1));
    EXPECT_EQ(back, p);
  }
}

TEST(JsonIo, DensityMatrixRoundTrip) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto rho = probs_to_density({u(rng), u(rng), u(rng)});
    EXPECT_EQ(Json::parse(Json(rho).dump()).get<DensityMatrix>(), rho);
  }
}

TEST(JsonIo, DensityMatrixLayout) {
  const Json j = probs_to_density({1.0, 1.0, 1.0});
  EXPECT_EQ(j.dump(), R"({"m":[[1.0,0.0],[0.5,-0.5],[0.5,0.5],[0.0,0.0]]})");
}

TEST(JsonIo, KeyOrderIsFixed) {
  EXPECT_EQ(Json(ProbabilityTriple{0.25, 0.5, 1.0}).dump(), R"({"p1":0.25,"p2":0.5,"p3":1.0})");
  EXPECT_EQ(Json(quantum_validity({0.5, 0.5, 0.5})).dump(),
            R"({"radius_squared":0.0,"is_quantum":true,"eigenvalues":[0.5,0.5],"purity_defect":-0.25})");
  EXPECT_EQ(Json(GameObservable{1, 2, 3, 4}).dump(), R"({"x":1.0,"y":2.0,"z1":3.0,"z2":4.0})");
}

TEST(JsonIo, DegenerateAnisotropyIsNull) {
  const Json j = moments({0.5, 0.5, 0.5}, {0, 0, 2, 2}, 2);
  EXPECT_TRUE(j["f"].is_null());
  EXPECT_EQ(j["moments"], Json::parse("[1.0, 2.0, 4.0]"));
}

TEST(JsonIo, MissingAndMistypedFieldsNameTheField) {
  try {
    (void)Json::parse(R"({"p1":0.5,"p3":0.5})").get<ProbabilityTriple>();
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.field(), "p2");
  }
  try {
    (void)Json::parse(R"({"x":1,"y":"0","z1":0,"z2":0})").get<GameObservable>();
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.field(), "y");
  }
  EXPECT_THROW((void)Json::parse(R"({"m":[[1,0],[0,0],[0,0]]})").get<DensityMatrix>(), InputError);
  EXPECT_THROW((void)Json::parse(R"([0.5, 0.5, 0.5])").get<ProbabilityTriple>(), InputError);
}

TEST(JsonIo, NonHermitianMatrixIsDomainError) {
  EXPECT_THROW((void)Json::parse(R"({"m":[[0.5,0],[0.3,0],[0.1,0],[0.5,0]]})").get<DensityMatrix>(), DomainError);
}

TEST(JsonIo, TossRecordParsing) {
  const auto r = Json::parse(R"({"n_tosses":10,"heads_counts":[1,2,3]})").get<TossRecord>();
  EXPECT_EQ(r, (TossRecord{10, {1, 2, 3}}));
  EXPECT_EQ(Json(r).dump(), R"({"n_tosses":10,"heads_counts":[1,2,3]})");
  EXPECT_THROW((void)Json::parse(R"({"n_tosses":-1,"heads_counts":[1,2,3]})").get<TossRecord>(), InputError);
}
