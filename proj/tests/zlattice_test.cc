// Copyright 2026 The mincomp Authors
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

#include "mincomp/zlattice.h"

#include <gtest/gtest.h>

#include <set>

#include "mincomp/errors.h"
#include "test_util.h"

namespace mincomp::zlattice {
namespace {

using testing::axes;

PeriodBasis basis2(Point a, Point b) { return PeriodBasis({a, b}); }

// v - w in L, by searching integer combinations with coefficients in
// [-6, 6].
bool congruent_by_search(const PeriodBasis& u, const Point& v, const Point& w) {
  const Point diff = sub(v, w);
  for (Int a = -6; a <= 6; ++a) {
    for (Int b = -6; b <= 6; ++b) {
      if (u.combine(Point{a, b}) == diff) return true;
    }
  }
  return false;
}

TEST(PeriodBasisTest, RejectsSingular) {
  try {
    basis2({1, 2}, {2, 4});
    FAIL() << "expected SingularBasis";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularBasis);
  }
}

TEST(PeriodBasisTest, RejectsRaggedColumns) {
  EXPECT_THROW(PeriodBasis({{1, 0}, {1}}), Error);
}

TEST(PeriodBasisTest, SignedDeterminant) {
  EXPECT_EQ(basis2({2, 0}, {1, 3}).determinant(), 6);
  EXPECT_EQ(basis2({0, 1}, {1, 0}).determinant(), -1);
}

TEST(QuotientTest, IdentityIsTrivial) {
  const QuotientStructure q(axes(2));
  EXPECT_EQ(q.order(), 1u);
  EXPECT_TRUE(q.invariant_factors().empty());
  EXPECT_EQ(q.reps(), std::vector<Point>{Point(2, 0)});
}

TEST(QuotientTest, DiagonalTwo) {
  const QuotientStructure q(axes(2, 2));
  EXPECT_EQ(q.order(), 4u);
  EXPECT_EQ(q.invariant_factors(), (std::vector<Int>{2, 2}));
  // Diagonal input keeps the coordinates as residue tuples.
  EXPECT_EQ(q.reps(),
            (std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
}

TEST(QuotientTest, CyclicOfOrderSix) {
  const PeriodBasis u = basis2({2, 0}, {1, 3});
  const QuotientStructure q(u);
  EXPECT_EQ(q.order(), 6u);
  EXPECT_EQ(q.invariant_factors(),
            testing::invariant_factors_by_minors(u.columns()));
  EXPECT_EQ(q.invariant_factors(), std::vector<Int>{6});
}

TEST(QuotientTest, FactorsMatchDeterminantalDivisors) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const PeriodBasis u = testing::random_basis(rng, d, 40);
    const QuotientStructure q(u);
    EXPECT_EQ(q.invariant_factors(),
              testing::invariant_factors_by_minors(u.columns()));
    Int prod = 1;
    for (Int a : q.invariant_factors()) prod *= a;
    EXPECT_EQ(static_cast<std::size_t>(prod), q.order());
    EXPECT_EQ(q.order(), static_cast<std::size_t>(std::abs(u.determinant())));
    for (std::size_t i = 1; i < q.invariant_factors().size(); ++i) {
      EXPECT_EQ(q.invariant_factors()[i] % q.invariant_factors()[i - 1], 0);
    }
  }
}

TEST(ConeCoordsTest, Examples) {
  EXPECT_EQ(*cone_coords(axes(2), Point{3, 5}), (Point{3, 5}));
  EXPECT_EQ(*cone_coords(axes(2, 2), Point{2, 4}), (Point{1, 2}));
  EXPECT_FALSE(cone_coords(axes(2, 2), Point{1, 2}).has_value());
}

TEST(ConeCoordsTest, DimensionMismatch) {
  try {
    cone_coords(axes(2), Point{1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(ConeCoordsTest, RoundTrip) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const PeriodBasis u = testing::random_basis(rng, d, 30);
    const Point v = testing::random_point(rng, d, -40, 40);
    if (const auto g = cone_coords(u, v)) {
      EXPECT_EQ(u.combine(*g), v);
    }
    const Point g = testing::random_point(rng, d, -5, 5);
    EXPECT_EQ(*cone_coords(u, u.combine(g)), g);
  }
}

TEST(ProjectTest, RepresentativesAreFixed) {
  const QuotientStructure q(basis2({2, 0}, {1, 3}));
  for (std::size_t k = 0; k < q.order(); ++k) {
    EXPECT_EQ(project(q, q.reps()[k]), k);
  }
}

TEST(ProjectTest, ParityReduction) {
  const QuotientStructure q(axes(2, 2));
  EXPECT_EQ(project(q, Point{3, 5}), project(q, Point{1, 1}));
}

TEST(ProjectTest, MatchesCongruenceSearch) {
  const PeriodBasis u = basis2({2, 0}, {1, 3});
  const QuotientStructure q(u);
  EXPECT_TRUE(congruent_by_search(u, {5, 4}, {2, 1}));
  EXPECT_EQ(project(q, Point{5, 4}), project(q, Point{2, 1}));
  for (Int x = -4; x <= 4; ++x) {
    for (Int y = -4; y <= 4; ++y) {
      for (std::size_t k = 0; k < q.order(); ++k) {
        EXPECT_EQ(project(q, Point{x, y}) == k,
                  congruent_by_search(u, {x, y}, q.reps()[k]));
      }
    }
  }
}

TEST(ProjectTest, RepsPairwiseIncongruent) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const PeriodBasis u = testing::random_basis(rng, d, 30);
    const QuotientStructure q(u);
    for (std::size_t i = 0; i < q.order(); ++i) {
      for (std::size_t j = i + 1; j < q.order(); ++j) {
        EXPECT_FALSE(u.coords(sub(q.reps()[i], q.reps()[j])).has_value());
      }
    }
  }
}

TEST(ProjectTest, Homomorphism) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const PeriodBasis u = testing::random_basis(rng, d, 30);
    const QuotientStructure q(u);
    for (int k = 0; k < 20; ++k) {
      const Point v = testing::random_point(rng, d, -50, 50);
      const Point w = testing::random_point(rng, d, -50, 50);
      EXPECT_EQ(q.project(add(v, w)), q.add(q.project(v), q.project(w)));
      EXPECT_EQ(q.project(neg(v)), q.negate(q.project(v)));
      const Point l = u.combine(testing::random_point(rng, d, -4, 4));
      EXPECT_EQ(q.project(add(v, l)), q.project(v));
    }
  }
}

TEST(ProjectTest, FullBoxHitsEveryResidue) {
  const PeriodBasis u = basis2({2, 0}, {1, 3});
  const QuotientStructure q(u);
  std::set<std::size_t> seen;
  for (const Point& p : box_points(Box{{0, 0}, {5, 5}})) seen.insert(q.project(p));
  EXPECT_EQ(seen.size(), q.order());
}

TEST(ProjectTest, OverflowIsReported) {
  const PeriodBasis u = axes(1, 3);
  try {
    checked_add(std::numeric_limits<Int>::max(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
  EXPECT_EQ(QuotientStructure(u).project(Point{std::numeric_limits<Int>::min()}),
            static_cast<std::size_t>(
                floor_mod(std::numeric_limits<Int>::min(), 3)));
}

}  // namespace
}  // namespace mincomp::zlattice
