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


#include "mincomp/oracle.h"

#include <gtest/gtest.h>

#include "mincomp/errors.h"
#include "mincomp/finitegrp.h"
#include "mincomp/gallery.h"
#include "test_util.h"

namespace mincomp::oracle {
namespace {

const std::vector<Point> kIdentity2 = {{1, 0}, {0, 1}};

TEST(WindowPointsTest, Examples) {
  auto nonneg = [](const Point& p) { return p[0] >= 0 && p[1] >= 0; };
  EXPECT_EQ(window_points(nonneg, cube(2, 2)).size(), 9u);
  const NaiveEPSet w{{{2}}, {{0}}, {{1}}};
  EXPECT_EQ(window_points([&](const Point& p) { return naive_member(w, p); },
                          Box{{-3}, {7}}),
            (std::vector<Point>{{0}, {1}, {3}, {5}, {7}}));
  EXPECT_TRUE(window_points([](const Point&) { return false; }, cube(2, 3)).empty());
}

TEST(WindowCoverTest, Examples) {
  const auto targets = box_points(cube(2, 4));
  EXPECT_TRUE(window_cover_check({{0, 0}}, [](const Point&) { return true; },
                                 targets)
                  .empty());

  const auto win = gallery::diagonal_hyperplane_windows(2, 1, cube(2, 10));
  auto diag = [](const Point& p) { return gallery::diagonal_member(p); };
  const auto core = box_points(cube(2, 5));
  EXPECT_TRUE(window_cover_check(win.hyperplane, diag, core).empty());

  std::vector<Point> less;
  for (const Point& h : win.hyperplane) {
    if (h != Point{0, 3}) less.push_back(h);
  }
  EXPECT_EQ(window_cover_check(less, diag, core), (std::vector<Point>{{0, 3}}));
}

TEST(GroupOracleTest, Elements) {
  const NaiveGroup g{{2, 3}};
  const auto e = naive_elements(g);
  ASSERT_EQ(e.size(), 6u);
  EXPECT_EQ(e.front(), (Tuple{0, 0}));
  EXPECT_EQ(e[1], (Tuple{0, 1}));
  EXPECT_EQ(e.back(), (Tuple{1, 2}));
  EXPECT_EQ(naive_elements(NaiveGroup{{}}).size(), 1u);
}

TEST(GroupOracleTest, Sumset) {
  const NaiveGroup z4{{4}};
  EXPECT_EQ(naive_sumset(z4, {{0}, {1}}, {{1}, {3}}),
            (TupleSet{{0}, {1}, {2}, {3}}));
}

TEST(GroupOracleTest, Minimality) {
  const NaiveGroup z4{{4}};
  TupleSet all;
  for (const auto& t : naive_elements(z4)) all.insert(t);
  EXPECT_TRUE(naive_minimality_check(z4, all, {{0}}));
  EXPECT_FALSE(naive_minimality_check(z4, {{0}}, {{0}, {1}}));
  EXPECT_TRUE(naive_minimality_check(z4, {{0}, {1}}, {{1}, {3}}));
  EXPECT_FALSE(naive_minimality_check(z4, {{0}, {1}}, all));
}

TEST(GroupOracleTest, MinimalityAgreesOnZ4) {
  const finitegrp::FiniteAbelianGroup g({4});
  for (std::uint64_t w = 1; w < 16; ++w) {
    for (std::uint64_t c = 1; c < 16; ++c) {
      const auto sw = testing::subset_from_mask(g, w);
      const auto sc = testing::subset_from_mask(g, c);
      EXPECT_EQ(naive_minimality_check(testing::naive(g), testing::tuples(sw),
                                       testing::tuples(sc)),
                finitegrp::is_minimal_complement(sw, sc).kind ==
                    finitegrp::MinimalityKind::kMinimal);
    }
  }
}

TEST(GroupOracleTest, PairSearch) {
  const NaiveGroup v4{{2, 2}};
  EXPECT_EQ(*naive_pair_search(v4, {{0, 0}}, {{1, 0}}),
            (TupleSet{{0, 0}, {0, 1}}));
  EXPECT_EQ(*naive_pair_search(v4, {{0, 0}, {1, 1}}, {{1, 0}, {0, 1}}),
            (TupleSet{{0, 0}}));
  const auto z4 = naive_pair_search({{4}}, {{0}}, {{2}});
  ASSERT_TRUE(z4.has_value());
  EXPECT_EQ(z4->size(), 2u);
  EXPECT_TRUE(naive_pair_conditions({{4}}, {{0}}, {{2}}, *z4));
  EXPECT_FALSE(naive_pair_search({{3}}, {{0}}, {{1}}).has_value());
}

TEST(GroupOracleTest, PairSearchCap) {
  try {
    naive_pair_search({{17}}, {{0}}, {{1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSearchTooLarge);
  }
}

TEST(LatticeOracleTest, Membership) {
  const std::vector<Point> u = {{2, 0}, {1, 3}};
  EXPECT_TRUE(naive_in_lattice(u, {3, 3}));
  EXPECT_FALSE(naive_in_lattice(u, {1, 0}));
  EXPECT_TRUE(naive_in_cone(u, {3, 3}));
  EXPECT_FALSE(naive_in_cone(u, {-1, 3}));
  EXPECT_TRUE(naive_in_cone(kIdentity2, {0, 0}));
  EXPECT_FALSE(naive_in_cone(kIdentity2, {0, -1}));
}

TEST(LatticeOracleTest, AgreesWithPeriodBasis) {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const auto u = testing::random_basis(rng, d, 20);
    for (int k = 0; k < 30; ++k) {
      const Point v = testing::random_point(rng, d, -12, 12);
      EXPECT_EQ(naive_in_lattice(u.columns(), v), u.coords(v).has_value());
      EXPECT_EQ(naive_in_cone(u.columns(), v), u.in_cone(v));
    }
  }
}

TEST(EPSetOracleTest, Member) {
  const NaiveEPSet w{{{2, 0}, {0, 2}}, {{0, 0}}, {{1, 0}}};
  EXPECT_TRUE(naive_member(w, {0, 0}));
  EXPECT_TRUE(naive_member(w, {3, 2}));
  EXPECT_FALSE(naive_member(w, {2, 0}));
}

TEST(GreedyOracleTest, OneFiveModFour) {
  const NaiveEPSet w{{{4}}, {{1}, {5}}, {{0}}};
  const auto g = naive_greedy(w, {{0}, {2}}, {{1}, {5}}, 1);
  EXPECT_EQ(g.kept, (std::set<Point>{{-4}, {-2}, {4}, {6}}));
  EXPECT_EQ(g.removed, (std::set<Point>{{0}, {2}}));
}

}  // namespace
}  // namespace mincomp::oracle
