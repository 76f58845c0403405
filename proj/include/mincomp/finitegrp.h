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

// Finite abelian groups Z/a_1 x ... x Z/a_s, their subsets, sumsets and
// additive complements.
//
// Elements are addressed by index: the lexicographic rank of the element
// tuple (first factor most significant). Index order is therefore the
// lexicographic order of tuples, which is the enumeration order used by the
// greedy and subset searches below.

#ifndef MINCOMP_FINITEGRP_H_
#define MINCOMP_FINITEGRP_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mincomp/point.h"

namespace mincomp::finitegrp {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultSearchCap = 24;
// Exhaustive subset searches work on 64-bit masks.
inline constexpr std::size_t kMaxSearchOrder = 64;

class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  // Every factor must be >= 2; an empty list is the trivial group.
  explicit FiniteAbelianGroup(std::vector<Int> factors);

  const std::vector<Int>& factors() const { return factors_; }
  std::size_t order() const { return order_; }
  std::size_t rank() const { return factors_.size(); }

  Elem zero() const { return 0; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem negate(Elem a) const;

  std::vector<Int> tuple(Elem e) const;
  // Coordinates are reduced modulo the factors.
  Elem index(std::span<const Int> tuple) const;

  friend bool operator==(const FiniteAbelianGroup&,
                         const FiniteAbelianGroup&) = default;

 private:
  std::vector<Int> factors_;
  std::size_t order_ = 1;
};

// Product group: factors concatenated in order.
FiniteAbelianGroup product_group(std::span<const FiniteAbelianGroup> parts);

class GroupSubset {
 public:
  GroupSubset() = default;
  GroupSubset(FiniteAbelianGroup group, std::vector<Elem> elements);

  static GroupSubset whole(const FiniteAbelianGroup& group);
  static GroupSubset from_tuples(const FiniteAbelianGroup& group,
                                 const std::vector<std::vector<Int>>& tuples);

  const FiniteAbelianGroup& group() const { return group_; }
  // Sorted, deduplicated.
  const std::vector<Elem>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(Elem e) const;

  GroupSubset without(Elem e) const;
  std::vector<std::vector<Int>> tuples() const;
  std::uint64_t mask() const;  // requires order <= 64

  friend bool operator==(const GroupSubset&, const GroupSubset&) = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<Elem> elements_;
};

// "{(0,0), (0,1)}" for rank != 1, "{0, 1}" for cyclic groups.
std::string format_subset(const GroupSubset& s);

GroupSubset sumset(const GroupSubset& a, const GroupSubset& b);

enum class MinimalityKind { kNotComplement, kComplementNotMinimal, kMinimal };

struct MinimalityResult {
  MinimalityKind kind;
  // Set for kComplementNotMinimal: an element whose removal keeps W + C = G.
  std::optional<Elem> removable;
};

MinimalityResult is_minimal_complement(const GroupSubset& w,
                                       const GroupSubset& c);

// Greedy removal over C in index order: c is dropped iff the remainder is
// still a complement of W. Requires W + C = G.
GroupSubset extract_minimal(const GroupSubset& w, const GroupSubset& c);

// A^r with A^0 = {0}.
GroupSubset power_sumset(const GroupSubset& a, std::size_t r);

// Minimal complement of A^r inside G for a symmetric generating set A
// containing 0.
GroupSubset minimal_r_net(const GroupSubset& a, std::size_t r);

// A set N with N + (Q u Q1) = G and, for every n in N, an element q of Q1
// whose sum n + q is not hit by (N \ {n}) + (Q u Q1). The witness maps each
// n to the first such q.
struct PairCertificate {
  GroupSubset n;
  std::map<Elem, Elem> witness;
};

// Checks the two conditions for a given N and returns the certificate when
// they hold.
std::optional<PairCertificate> check_pair_conditions(const GroupSubset& q1,
                                                     const GroupSubset& q,
                                                     const GroupSubset& n);

bool is_valid_pair_certificate(const GroupSubset& q1, const GroupSubset& q,
                               const PairCertificate& cert);

struct SearchOptions {
  // Largest group order searched exhaustively.
  std::size_t cap = kDefaultSearchCap;
};

// Exhaustive search by (cardinality, lexicographic) order for groups of
// order <= cap. Larger groups are handled only through the structured
// certificates of structured_pair_certificate; kSearchTooLarge otherwise.
std::optional<PairCertificate> pair_minimal_complement(
    const GroupSubset& q1, const GroupSubset& q,
    const SearchOptions& options = {});

// Closed-form certificates that need no search: Q u Q1 = G, Q u Q1 a coset
// of a subgroup, and the elementary 2-group case where Q u Q1 misses a
// single element.
std::optional<PairCertificate> structured_pair_certificate(
    const GroupSubset& q1, const GroupSubset& q);

// First nonempty subset, in (cardinality, lexicographic) order, accepted by
// `accept`. Masks index group elements. Requires order <= kMaxSearchOrder.
std::optional<std::uint64_t> first_subset(
    std::size_t order, const std::function<bool(std::uint64_t)>& accept);

// mask of {g + s : s in S} for every g.
std::vector<std::uint64_t> translate_masks(const GroupSubset& s);

struct ProductPart {
  GroupSubset w;
  GroupSubset m;
};

// (prod W_i, prod M_i) in the product group. Each M_i must be a minimal
// complement of W_i (kNotMinimalInput with the part index otherwise).
std::pair<GroupSubset, GroupSubset> product_minimal(
    std::span<const ProductPart> parts);

// Cartesian product of subsets.
GroupSubset product_subset(std::span<const GroupSubset> parts);

}  // namespace mincomp::finitegrp

#endif  // MINCOMP_FINITEGRP_H_
