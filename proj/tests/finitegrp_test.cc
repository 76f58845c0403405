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


#include "mincomp/finitegrp.h"

#include <gtest/gtest.h>

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "mincomp/errors.h"
#include "mincomp/oracle.h"
#include "test_util.h"

namespace mincomp::finitegrp {
namespace {

using testing::naive;
using testing::subset_from_mask;
using testing::tuples;
using Tuples = std::vector<std::vector<Int>>;

const FiniteAbelianGroup kV4({2, 2});
const FiniteAbelianGroup kZ4({4});
const FiniteAbelianGroup kZ6({6});

GroupSubset cyc(const FiniteAbelianGroup& g, std::vector<Elem> e) {
  return GroupSubset(g, std::move(e));
}

GroupSubset v4(const Tuples& t) { return GroupSubset::from_tuples(kV4, t); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParseError;
}

// Groups of order at most 8, one per isomorphism type plus a few extras.
std::vector<FiniteAbelianGroup> small_groups() {
  return {FiniteAbelianGroup({2}),       FiniteAbelianGroup({3}),
          FiniteAbelianGroup({4}),       FiniteAbelianGroup({2, 2}),
          FiniteAbelianGroup({5}),       FiniteAbelianGroup({6}),
          FiniteAbelianGroup({7}),       FiniteAbelianGroup({8}),
          FiniteAbelianGroup({2, 4}),    FiniteAbelianGroup({2, 2, 2})};
}

TEST(GroupTest, Arithmetic) {
  const FiniteAbelianGroup g({2, 4});
  EXPECT_EQ(g.order(), 8u);
  const Elem a = g.index(std::vector<Int>{1, 3});
  const Elem b = g.index(std::vector<Int>{1, 2});
  EXPECT_EQ(g.tuple(g.add(a, b)), (std::vector<Int>{0, 1}));
  EXPECT_EQ(g.tuple(g.negate(a)), (std::vector<Int>{1, 1}));
  EXPECT_EQ(g.index(std::vector<Int>{-1, 5}), g.index(std::vector<Int>{1, 1}));
  EXPECT_EQ(g.sub(a, a), g.zero());
}

TEST(GroupTest, RejectsBadFactors) {
  EXPECT_EQ(code_of([] { FiniteAbelianGroup({1}); }), ErrorCode::kBadParams);
  EXPECT_EQ(FiniteAbelianGroup().order(), 1u);
}

TEST(SumsetTest, Examples) {
  const GroupSubset b = cyc(kZ4, {1, 3});
  EXPECT_EQ(sumset(cyc(kZ4, {0}), b), b);
  EXPECT_EQ(sumset(cyc(kZ4, {0, 1}), b), GroupSubset::whole(kZ4));
  EXPECT_EQ(sumset(v4({{0, 0}}), v4({{1, 0}})), v4({{1, 0}}));
}

TEST(SumsetTest, GroupMismatch) {
  EXPECT_EQ(code_of([] { sumset(cyc(kZ4, {0}), v4({{0, 0}})); }),
            ErrorCode::kGroupMismatch);
}

TEST(SumsetTest, MatchesOracle) {
  for (const auto& g : small_groups()) {
    const std::uint64_t n = std::uint64_t{1} << g.order();
    for (std::uint64_t a = 1; a < n; a += 3) {
      for (std::uint64_t b = 1; b < n; b += 5) {
        const auto sa = subset_from_mask(g, a), sb = subset_from_mask(g, b);
        EXPECT_EQ(tuples(sumset(sa, sb)),
                  oracle::naive_sumset(naive(g), tuples(sa), tuples(sb)));
      }
    }
  }
}

TEST(MinimalityTest, Examples) {
  EXPECT_EQ(is_minimal_complement(GroupSubset::whole(kZ4), cyc(kZ4, {0})).kind,
            MinimalityKind::kMinimal);
  EXPECT_EQ(is_minimal_complement(cyc(kZ4, {0, 1}), cyc(kZ4, {1, 3})).kind,
            MinimalityKind::kMinimal);
  const auto r =
      is_minimal_complement(cyc(kZ4, {0, 1}), GroupSubset::whole(kZ4));
  EXPECT_EQ(r.kind, MinimalityKind::kComplementNotMinimal);
  ASSERT_TRUE(r.removable.has_value());
  EXPECT_EQ(sumset(cyc(kZ4, {0, 1}), GroupSubset::whole(kZ4).without(*r.removable)),
            GroupSubset::whole(kZ4));
  EXPECT_EQ(is_minimal_complement(cyc(kZ4, {0}), cyc(kZ4, {1})).kind,
            MinimalityKind::kNotComplement);
}

TEST(MinimalityTest, Errors) {
  EXPECT_EQ(code_of([] { is_minimal_complement(cyc(kZ4, {}), cyc(kZ4, {0})); }),
            ErrorCode::kEmptySet);
  EXPECT_EQ(code_of([] { is_minimal_complement(cyc(kZ4, {0}), v4({{0, 0}})); }),
            ErrorCode::kGroupMismatch);
}

TEST(MinimalityTest, MatchesOracle) {
  for (const auto& g : small_groups()) {
    if (g.order() > 6) continue;
    const std::uint64_t n = std::uint64_t{1} << g.order();
    for (std::uint64_t w = 1; w < n; ++w) {
      for (std::uint64_t c = 1; c < n; ++c) {
        const auto sw = subset_from_mask(g, w), sc = subset_from_mask(g, c);
        const auto kind = is_minimal_complement(sw, sc).kind;
        const bool complement =
            oracle::naive_is_complement(naive(g), tuples(sw), tuples(sc));
        EXPECT_EQ(kind != MinimalityKind::kNotComplement, complement);
        EXPECT_EQ(kind == MinimalityKind::kMinimal,
                  oracle::naive_minimality_check(naive(g), tuples(sw),
                                                 tuples(sc)));
      }
    }
  }
}

TEST(ExtractMinimalTest, Examples) {
  const auto g4 = GroupSubset::whole(kZ4);
  // The greedy drops 0, 1 and 2 in turn and must keep the last element.
  EXPECT_EQ(extract_minimal(g4, g4), cyc(kZ4, {3}));
  EXPECT_EQ(extract_minimal(cyc(kZ4, {0, 1}), g4), cyc(kZ4, {1, 3}));
  const auto g6 = GroupSubset::whole(kZ6);
  EXPECT_EQ(extract_minimal(cyc(kZ6, {0}), g6), g6);
}

TEST(ExtractMinimalTest, RejectsNonComplement) {
  EXPECT_EQ(code_of([] { extract_minimal(cyc(kZ4, {0}), cyc(kZ4, {1})); }),
            ErrorCode::kNotAComplement);
}

TEST(ExtractMinimalTest, AlwaysMinimal) {
  for (const auto& g : small_groups()) {
    const std::uint64_t n = std::uint64_t{1} << g.order();
    // All W, all complements C for order <= 6; a stride beyond that.
    const std::uint64_t step = g.order() <= 6 ? 1 : 7;
    for (std::uint64_t w = 1; w < n; w += step) {
      const auto sw = subset_from_mask(g, w);
      for (std::uint64_t c = 1; c < n; c += step) {
        const auto sc = subset_from_mask(g, c);
        if (sumset(sw, sc).size() != g.order()) continue;
        const auto m = extract_minimal(sw, sc);
        EXPECT_EQ(m.mask() & ~c, 0u);
        EXPECT_TRUE(
            oracle::naive_minimality_check(naive(g), tuples(sw), tuples(m)));
      }
    }
  }
}

TEST(RNetTest, Examples) {
  const auto a = cyc(kZ6, {0, 1, 5});
  EXPECT_EQ(minimal_r_net(a, 0), GroupSubset::whole(kZ6));
  const auto net1 = minimal_r_net(a, 1);
  EXPECT_EQ(net1.size(), 2u);
  EXPECT_EQ(sumset(a, net1), GroupSubset::whole(kZ6));
  EXPECT_EQ(minimal_r_net(a, 3).size(), 1u);
  EXPECT_EQ(power_sumset(a, 3), GroupSubset::whole(kZ6));
  EXPECT_EQ(power_sumset(a, 0), cyc(kZ6, {0}));
}

TEST(RNetTest, NoSingletonCoversAtRadiusOne) {
  const auto a = cyc(kZ6, {0, 1, 5});
  for (Elem x = 0; x < 6; ++x) {
    EXPECT_NE(sumset(a, cyc(kZ6, {x})).size(), 6u);
  }
}

TEST(RNetTest, Preconditions) {
  EXPECT_EQ(code_of([] { minimal_r_net(cyc(kZ6, {0, 1}), 1); }),
            ErrorCode::kNotSymmetric);
  EXPECT_EQ(code_of([] { minimal_r_net(cyc(kZ6, {1, 5}), 1); }),
            ErrorCode::kNotSymmetric);
  EXPECT_EQ(code_of([] { minimal_r_net(cyc(kZ6, {0, 2, 4}), 1); }),
            ErrorCode::kNotGenerating);
}

TEST(PairTest, TableRowsAllHaveCertificates) {
  struct Row {
    Tuples q1, q, n;
  };
  const std::vector<Row> rows = {
      {{{0, 0}}, {{1, 0}}, {{0, 0}, {0, 1}}},
      {{{0, 0}}, {{0, 1}}, {{0, 0}, {1, 0}}},
      {{{0, 0}}, {{1, 1}}, {{0, 0}, {0, 1}}},
      {{{0, 0}}, {{1, 0}, {0, 1}}, {{0, 0}, {1, 1}}},
      {{{0, 0}}, {{1, 0}, {1, 1}}, {{0, 0}, {0, 1}}},
      {{{0, 0}}, {{0, 1}, {1, 1}}, {{0, 0}, {1, 0}}},
      {{{0, 0}, {1, 0}}, {{0, 1}}, {{0, 0}, {1, 1}}},
      {{{0, 0}, {1, 0}}, {{1, 1}}, {{0, 0}, {0, 1}}},
      {{{0, 0}, {0, 1}}, {{1, 0}}, {{0, 0}, {1, 1}}},
      {{{0, 0}, {0, 1}}, {{1, 1}}, {{0, 0}, {1, 0}}},
      {{{0, 0}, {1, 1}}, {{1, 0}}, {{0, 0}, {0, 1}}},
      {{{0, 0}, {1, 1}}, {{0, 1}}, {{0, 0}, {1, 0}}},
  };
  for (const Row& r : rows) {
    const auto q1 = v4(r.q1), q = v4(r.q), n = v4(r.n);
    const auto cert = pair_minimal_complement(q1, q);
    ASSERT_TRUE(cert.has_value()) << format_subset(q1) << " " << format_subset(q);
    EXPECT_TRUE(is_valid_pair_certificate(q1, q, *cert));
    const auto table = check_pair_conditions(q1, q, n);
    ASSERT_TRUE(table.has_value()) << format_subset(n);
    EXPECT_TRUE(is_valid_pair_certificate(q1, q, *table));
    EXPECT_TRUE(oracle::naive_pair_conditions(naive(kV4), tuples(q1),
                                              tuples(q), tuples(n)));
  }
}

TEST(PairTest, FirstTableRowExactly) {
  const auto cert = pair_minimal_complement(v4({{0, 0}}), v4({{1, 0}}));
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->n, v4({{0, 0}, {0, 1}}));
}

TEST(PairTest, UnionIsWholeGroup) {
  const auto cert = pair_minimal_complement(cyc(kZ4, {0, 1}), cyc(kZ4, {2, 3}));
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->n, cyc(kZ4, {0}));
}

TEST(PairTest, SubgroupCosetReps) {
  const auto cert = pair_minimal_complement(cyc(kZ4, {0}), cyc(kZ4, {2}));
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->n, cyc(kZ4, {0, 1}));
}

TEST(PairTest, Errors) {
  EXPECT_EQ(code_of([] { pair_minimal_complement(cyc(kZ4, {0}), cyc(kZ4, {0, 1})); }),
            ErrorCode::kNotDisjoint);
  EXPECT_EQ(code_of([] { pair_minimal_complement(cyc(kZ4, {}), cyc(kZ4, {1})); }),
            ErrorCode::kEmptySet);
}

TEST(PairTest, ConditionCheckerRejectsBadN) {
  // N = {0} does not cover when Q1 u Q is a proper subset.
  EXPECT_FALSE(
      check_pair_conditions(v4({{0, 0}}), v4({{1, 0}}), v4({{0, 0}})).has_value());
  // Whole group covers but every n+q is hit twice.
  EXPECT_FALSE(check_pair_conditions(v4({{0, 0}}), v4({{1, 0}}),
                                     GroupSubset::whole(kV4))
                   .has_value());
}

TEST(PairTest, WitnessesSatisfyConditionTwo) {
  const auto q1 = cyc(kZ6, {0}), q = cyc(kZ6, {3});
  const auto cert = pair_minimal_complement(q1, q);
  ASSERT_TRUE(cert.has_value());
  for (Elem n : cert->n.elements()) {
    ASSERT_TRUE(cert->witness.count(n));
    EXPECT_TRUE(q1.contains(cert->witness.at(n)));
  }
  // Tampering with a witness breaks validity.
  PairCertificate bad = *cert;
  bad.witness.begin()->second = 3;
  EXPECT_FALSE(is_valid_pair_certificate(q1, q, bad));
}

// Enumerates all disjoint nonempty pairs (Q1, Q) of g.
template <typename F>
void for_each_pair(const FiniteAbelianGroup& g, F f) {
  const std::uint64_t n = std::uint64_t{1} << g.order();
  for (std::uint64_t a = 1; a < n; ++a) {
    for (std::uint64_t b = 1; b < n; ++b) {
      if (a & b) continue;
      f(subset_from_mask(g, a), subset_from_mask(g, b));
    }
  }
}

TEST(PairTest, AgreesWithOracle) {
  for (const auto& g : {kV4, kZ4}) {
    for_each_pair(g, [&](const GroupSubset& q1, const GroupSubset& q) {
      const auto cert = pair_minimal_complement(q1, q);
      const auto ref =
          oracle::naive_pair_search(naive(g), tuples(q1), tuples(q));
      EXPECT_EQ(cert.has_value(), ref.has_value());
      if (cert) EXPECT_EQ(tuples(cert->n).size(), ref->size());
    });
  }
}

TEST(PairTest, TranslationInvariance) {
  for (const auto& g : small_groups()) {
    if (g.order() > 8) continue;
    const std::uint64_t n = std::uint64_t{1} << g.order();
    int checked = 0;
    for (std::uint64_t a = 1; a < n; a += (g.order() > 6 ? 5 : 1)) {
      for (std::uint64_t b = 1; b < n; b += (g.order() > 6 ? 3 : 1)) {
        if (a & b) continue;
        const auto q1 = subset_from_mask(g, a), q = subset_from_mask(g, b);
        const bool base = pair_minimal_complement(q1, q).has_value();
        for (Elem v = 1; v < g.order(); ++v) {
          std::vector<Elem> t1, t;
          for (Elem e : q1.elements()) t1.push_back(g.add(e, v));
          for (Elem e : q.elements()) t.push_back(g.add(e, v));
          EXPECT_EQ(base, pair_minimal_complement(GroupSubset(g, t1),
                                                  GroupSubset(g, t))
                              .has_value());
        }
        ++checked;
      }
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(PairTest, ElementaryTwoGroups) {
  for (const auto& g : {kV4, FiniteAbelianGroup({2, 2, 2})}) {
    for_each_pair(g, [&](const GroupSubset& q1, const GroupSubset& q) {
      const bool singletons = q1.size() == 1 && q.size() == 1;
      const bool misses_one = q1.size() + q.size() + 1 == g.order();
      if (!singletons && !misses_one) return;
      const auto cert = pair_minimal_complement(q1, q);
      EXPECT_TRUE(cert.has_value())
          << format_subset(q1) << " " << format_subset(q);
    });
  }
}

TEST(PairTest, CapRaisesSearchTooLarge) {
  // Z/5 with Q1={0}, Q={1}: no structured certificate applies.
  const FiniteAbelianGroup g({5});
  EXPECT_EQ(code_of([&] {
              pair_minimal_complement(cyc(g, {0}), cyc(g, {1}),
                                      SearchOptions{.cap = 4});
            }),
            ErrorCode::kSearchTooLarge);
}

TEST(PairTest, StructuredFallbackAboveCap) {
  // Q1 u Q a subgroup of order 3 in Z/27 x ... stays answerable.
  const FiniteAbelianGroup g({3, 9});
  const auto q1 = GroupSubset::from_tuples(g, {{0, 0}});
  const auto q = GroupSubset::from_tuples(g, {{1, 0}, {2, 0}});
  const auto cert = pair_minimal_complement(q1, q, SearchOptions{.cap = 8});
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->n.size(), 9u);
  EXPECT_TRUE(is_valid_pair_certificate(q1, q, *cert));
}

TEST(PairTest, StructuredAgreesWithSearchWhenPresent) {
  for (const auto& g : {kV4, kZ4, kZ6, FiniteAbelianGroup({2, 2, 2})}) {
    for_each_pair(g, [&](const GroupSubset& q1, const GroupSubset& q) {
      if (const auto s = structured_pair_certificate(q1, q)) {
        EXPECT_TRUE(is_valid_pair_certificate(q1, q, *s));
        EXPECT_TRUE(pair_minimal_complement(q1, q).has_value());
      }
    });
  }
}

TEST(ProductTest, SinglePartIsIdentity) {
  const std::vector<ProductPart> parts = {{cyc(kZ4, {0, 1}), cyc(kZ4, {1, 3})}};
  const auto [w, m] = product_minimal(parts);
  EXPECT_EQ(w.elements(), (std::vector<Elem>{0, 1}));
  EXPECT_EQ(m.elements(), (std::vector<Elem>{1, 3}));
}

TEST(ProductTest, Z4TimesZ2) {
  const FiniteAbelianGroup z2({2});
  const std::vector<ProductPart> parts = {
      {cyc(kZ4, {0, 1}), cyc(kZ4, {1, 3})}, {cyc(z2, {0}), cyc(z2, {0, 1})}};
  const auto [w, m] = product_minimal(parts);
  EXPECT_EQ(w.group().order(), 8u);
  EXPECT_EQ(w.size(), 2u);
  EXPECT_EQ(m.size(), 4u);
  EXPECT_EQ(is_minimal_complement(w, m).kind, MinimalityKind::kMinimal);
  EXPECT_TRUE(oracle::naive_minimality_check(naive(w.group()), tuples(w),
                                             tuples(m)));
}

TEST(ProductTest, TwoCopiesOfZ2) {
  const FiniteAbelianGroup z2({2});
  const std::vector<ProductPart> parts = {{cyc(z2, {0}), cyc(z2, {0, 1})},
                                          {cyc(z2, {0}), cyc(z2, {0, 1})}};
  const auto [w, m] = product_minimal(parts);
  EXPECT_EQ(m.size(), 4u);
  EXPECT_EQ(w.size(), 1u);
  EXPECT_EQ(is_minimal_complement(w, m).kind, MinimalityKind::kMinimal);
}

TEST(ProductTest, RejectsNonMinimalPart) {
  const FiniteAbelianGroup z2({2});
  const std::vector<ProductPart> parts = {
      {cyc(z2, {0}), cyc(z2, {0, 1})},
      {cyc(kZ4, {0, 1}), GroupSubset::whole(kZ4)}};
  try {
    product_minimal(parts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMinimalInput);
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(SearchHelpersTest, FirstSubsetOrder) {
  // Smallest cardinality first, then lexicographic.
  const auto m = first_subset(4, [](std::uint64_t s) {
    return std::popcount(s) >= 2 && (s & 0b1000);
  });
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m, 0b1001u);
  EXPECT_FALSE(first_subset(3, [](std::uint64_t) { return false; }).has_value());
}

}  // namespace
}  // namespace mincomp::finitegrp
