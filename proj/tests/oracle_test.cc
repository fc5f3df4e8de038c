// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include "gtest/gtest.h"
#include "matknap/errors.h"
#include "matknap/generator.h"
#include "matknap/oracle.h"
#include "test_support.h"

namespace matknap {
namespace {

CoverageOracle SmallCoverage() {
  return CoverageOracle(4, {{0, 1}, {1, 2}, {3}});
}

TEST(OracleTest, EmptySetIsZero) {
  EXPECT_EQ(SmallCoverage().Evaluate(ElementSet{}), 0.0);
  EXPECT_EQ(ModularOracle({3, 4}).Evaluate(ElementSet{}), 0.0);
  EXPECT_EQ(FacilityLocationOracle({{1, 0}, {0, 2}}).Evaluate(ElementSet{}),
            0.0);
}

TEST(OracleTest, ClosedForms) {
  EXPECT_EQ(SmallCoverage().Evaluate(ElementSet{0, 2}), 3.0);
  EXPECT_EQ(SmallCoverage().Evaluate(ElementSet{0, 1, 2}), 4.0);
  EXPECT_EQ(FacilityLocationOracle({{1, 0}, {0, 2}}).Evaluate(ElementSet{0, 1}),
            3.0);
  EXPECT_EQ(ModularOracle({3, 4, 5}).Evaluate(ElementSet{0, 2}), 8.0);
  CoverageOracle weighted(3, {{0}, {0, 2}}, {5, 1, 2});
  EXPECT_EQ(weighted.Evaluate(ElementSet{0, 1}), 7.0);
}

TEST(OracleTest, DimensionErrors) {
  EXPECT_THROW(CoverageOracle(2, {{0, 2}}), InvalidOracleError);
  EXPECT_THROW(CoverageOracle(2, {{0}}, {1.0}), InvalidOracleError);
  EXPECT_THROW(FacilityLocationOracle({{1, 2}, {3}}), InvalidOracleError);
  EXPECT_THROW(ModularOracle({-1.0}), InvalidOracleError);
  EXPECT_THROW(SmallCoverage().Evaluate(ElementSet{3}), InvalidOracleError);
  EXPECT_THROW(SmallCoverage().Evaluate(ElementSet{1, 0}), InvalidOracleError);
}

TEST(OracleCheckTest, ModularPasses) {
  ModularOracle modular({1, 5, 2, 7, 0, 3});
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_TRUE(CheckSubmodularMonotone(modular, 6, 200, seed).ok);
  }
  EXPECT_TRUE(CheckSubmodularMonotoneExhaustive(modular, 6).ok);
}

TEST(OracleCheckTest, CoveragePasses) {
  const CoverageOracle coverage = SmallCoverage();
  EXPECT_TRUE(CheckSubmodularMonotone(coverage, 3, 1000, 1).ok);
  EXPECT_TRUE(CheckSubmodularMonotoneExhaustive(coverage, 3).ok);
}

TEST(OracleCheckTest, SquaredCardinalityFailsWithWitness) {
  testing::SquaredCardinalityOracle squared(6);
  const OracleCheckResult sampled = CheckSubmodularMonotone(squared, 6, 200, 3);
  ASSERT_FALSE(sampled.ok);
  ASSERT_TRUE(sampled.witness.has_value());
  EXPECT_LT(sampled.witness->lhs, sampled.witness->rhs - kPropertyTolerance);

  const OracleCheckResult exhaustive =
      CheckSubmodularMonotoneExhaustive(squared, 4);
  ASSERT_FALSE(exhaustive.ok);
  // Re-derive the witness inequality from scratch.
  const OracleViolation& w = *exhaustive.witness;
  if (w.kind == "submodularity") {
    EXPECT_LT(squared.Evaluate(w.r) + squared.Evaluate(w.t),
              squared.Evaluate(Union(w.r, w.t)) +
                  squared.Evaluate(Intersection(w.r, w.t)));
  } else {
    ASSERT_EQ(w.kind, "diminishing_returns");
    EXPECT_LT(squared.Evaluate(With(w.t, w.u)) - squared.Evaluate(w.t),
              squared.Evaluate(With(w.r, w.u)) - squared.Evaluate(w.r));
  }
}

TEST(OracleCheckTest, GeneratedFamiliesPassExhaustively) {
  for (const char* family : {"coverage", "modular", "facility_location"}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GeneratorSpec spec;
      spec.n = 8;
      spec.oracle = family;
      spec.seed = seed;
      const Instance instance = GenerateInstance(spec);
      const OracleCheckResult result =
          CheckSubmodularMonotoneExhaustive(instance.oracle(), 8);
      EXPECT_TRUE(result.ok) << family << " seed " << seed << ": "
                             << result.witness->Describe();
    }
  }
}

TEST(OracleSessionTest, CachingIsTransparentAndCounted) {
  const CoverageOracle coverage = SmallCoverage();
  OracleSession cached(coverage, true);
  OracleSession plain(coverage, false);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const ElementSet s = FromMask(rng() & 7);
    EXPECT_EQ(cached.Evaluate(s), plain.Evaluate(s));
  }
  EXPECT_EQ(cached.stats().eval_calls, 100);
  EXPECT_EQ(plain.stats().eval_calls, 100);
  EXPECT_EQ(plain.stats().cache_hits, 0);
  // Only 8 distinct subsets exist.
  EXPECT_GE(cached.stats().cache_hits, 92);
  EXPECT_GE(cached.stats().eval_calls, cached.stats().cache_hits);
  cached.ClearCache();
  cached.Evaluate(ElementSet{0});
  EXPECT_EQ(cached.stats().eval_calls, 101);
}

// Unit-weight coverage never exceeds the universe size or the summed set
// sizes.
TEST(OracleProperty, UnitCoverageBounds) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GeneratorSpec spec;
    spec.n = 9;
    spec.oracle = "coverage";
    spec.seed = seed;
    const Instance instance = GenerateInstance(spec);
    const auto& cov = dynamic_cast<const CoverageOracle&>(instance.oracle());
    CoverageOracle unit(cov.universe_size(), cov.sets());
    for (int t = 0; t < 20; ++t) {
      const ElementSet s = FromMask(rng() & 0x1ff);
      double total = 0;
      for (ElementId u : s) total += cov.sets()[u].size();
      const double v = unit.Evaluate(s);
      EXPECT_LE(v, unit.universe_size());
      EXPECT_LE(v, total);
    }
  }
}

}  // namespace
}  // namespace matknap
