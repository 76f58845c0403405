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

#include <algorithm>
#include <limits>

#include "mincomp/errors.h"

namespace mincomp::finitegrp {
namespace {

constexpr std::size_t kMaxOrder = std::numeric_limits<Elem>::max() / 2;

void require_same_group(const GroupSubset& a, const GroupSubset& b) {
  if (!(a.group() == b.group())) {
    throw Error(ErrorCode::kGroupMismatch, "subsets live in different groups");
  }
}

void require_nonempty(const GroupSubset& a, const char* what) {
  if (a.empty()) {
    throw Error(ErrorCode::kEmptySet, std::string(what) + " is empty");
  }
}

// Number of representations x = c + w for every x.
std::vector<std::size_t> representation_counts(const std::vector<Elem>& c,
                                               const GroupSubset& w) {
  const FiniteAbelianGroup& g = w.group();
  std::vector<std::size_t> count(g.order(), 0);
  for (Elem ci : c) {
    for (Elem wi : w.elements()) ++count[g.add(ci, wi)];
  }
  return count;
}

bool covers_all(const std::vector<std::size_t>& count) {
  return std::all_of(count.begin(), count.end(),
                     [](std::size_t k) { return k > 0; });
}

// c is removable iff every x in c + W has another representation.
bool removable(const FiniteAbelianGroup& g, Elem c, const GroupSubset& w,
               const std::vector<std::size_t>& count) {
  for (Elem wi : w.elements()) {
    if (count[g.add(c, wi)] < 2) return false;
  }
  return true;
}

std::optional<PairCertificate> certificate_from_mask(const GroupSubset& q1,
                                                     const GroupSubset& q,
                                                     std::uint64_t mask) {
  std::vector<Elem> n;
  for (std::size_t i = 0; i < q.group().order(); ++i) {
    if (mask >> i & 1) n.push_back(static_cast<Elem>(i));
  }
  return check_pair_conditions(q1, q, GroupSubset(q.group(), std::move(n)));
}

void check_pair_inputs(const GroupSubset& q1, const GroupSubset& q) {
  require_same_group(q1, q);
  require_nonempty(q1, "Q1");
  require_nonempty(q, "Q");
  for (Elem e : q1.elements()) {
    if (q.contains(e)) {
      throw Error(ErrorCode::kNotDisjoint, "Q1 and Q intersect");
    }
  }
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Int> factors)
    : factors_(std::move(factors)) {
  for (Int a : factors_) {
    if (a < 2) {
      throw Error(ErrorCode::kBadParams, "cyclic factors must be >= 2");
    }
    if (order_ > kMaxOrder / static_cast<std::size_t>(a)) {
      throw Error(ErrorCode::kBadParams, "group order too large");
    }
    order_ *= static_cast<std::size_t>(a);
  }
}

std::vector<Int> FiniteAbelianGroup::tuple(Elem e) const {
  std::vector<Int> t(factors_.size());
  std::size_t rest = e;
  for (std::size_t f = factors_.size(); f-- > 0;) {
    const auto a = static_cast<std::size_t>(factors_[f]);
    t[f] = static_cast<Int>(rest % a);
    rest /= a;
  }
  return t;
}

Elem FiniteAbelianGroup::index(std::span<const Int> t) const {
  require_dim(t, factors_.size());
  std::size_t idx = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    idx = idx * static_cast<std::size_t>(factors_[f]) +
          static_cast<std::size_t>(floor_mod(t[f], factors_[f]));
  }
  return static_cast<Elem>(idx);
}

Elem FiniteAbelianGroup::add(Elem a, Elem b) const {
  std::size_t result = 0, stride = 1;
  for (std::size_t f = factors_.size(); f-- > 0;) {
    const auto m = static_cast<std::size_t>(factors_[f]);
    const std::size_t da = a % m, db = b % m;
    a /= m;
    b /= m;
    result += ((da + db) % m) * stride;
    stride *= m;
  }
  return static_cast<Elem>(result);
}

Elem FiniteAbelianGroup::negate(Elem a) const {
  std::size_t result = 0, stride = 1;
  for (std::size_t f = factors_.size(); f-- > 0;) {
    const auto m = static_cast<std::size_t>(factors_[f]);
    const std::size_t da = a % m;
    a /= m;
    result += ((m - da) % m) * stride;
    stride *= m;
  }
  return static_cast<Elem>(result);
}

Elem FiniteAbelianGroup::sub(Elem a, Elem b) const { return add(a, negate(b)); }

FiniteAbelianGroup product_group(std::span<const FiniteAbelianGroup> parts) {
  std::vector<Int> factors;
  for (const auto& p : parts) {
    factors.insert(factors.end(), p.factors().begin(), p.factors().end());
  }
  return FiniteAbelianGroup(std::move(factors));
}

GroupSubset::GroupSubset(FiniteAbelianGroup group, std::vector<Elem> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (!elements_.empty() && elements_.back() >= group_.order()) {
    throw Error(ErrorCode::kBadParams, "element index out of range");
  }
}

GroupSubset GroupSubset::whole(const FiniteAbelianGroup& group) {
  std::vector<Elem> all(group.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return GroupSubset(group, std::move(all));
}

GroupSubset GroupSubset::from_tuples(
    const FiniteAbelianGroup& group,
    const std::vector<std::vector<Int>>& tuples) {
  std::vector<Elem> elems;
  elems.reserve(tuples.size());
  for (const auto& t : tuples) elems.push_back(group.index(t));
  return GroupSubset(group, std::move(elems));
}

bool GroupSubset::contains(Elem e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

GroupSubset GroupSubset::without(Elem e) const {
  std::vector<Elem> rest;
  for (Elem x : elements_) {
    if (x != e) rest.push_back(x);
  }
  return GroupSubset(group_, std::move(rest));
}

std::vector<std::vector<Int>> GroupSubset::tuples() const {
  std::vector<std::vector<Int>> out;
  out.reserve(elements_.size());
  for (Elem e : elements_) out.push_back(group_.tuple(e));
  return out;
}

std::uint64_t GroupSubset::mask() const {
  if (group_.order() > kMaxSearchOrder) {
    throw Error(ErrorCode::kSearchTooLarge, "mask needs order <= 64");
  }
  std::uint64_t m = 0;
  for (Elem e : elements_) m |= std::uint64_t{1} << e;
  return m;
}

std::string format_subset(const GroupSubset& s) {
  std::string out = "{";
  bool first = true;
  for (Elem e : s.elements()) {
    if (!first) out += ", ";
    first = false;
    const std::vector<Int> t = s.group().tuple(e);
    if (t.size() == 1) {
      out += std::to_string(t[0]);
    } else {
      out += format_point(t);
    }
  }
  return out + "}";
}

GroupSubset sumset(const GroupSubset& a, const GroupSubset& b) {
  require_same_group(a, b);
  const FiniteAbelianGroup& g = a.group();
  std::vector<bool> hit(g.order(), false);
  for (Elem x : a.elements()) {
    for (Elem y : b.elements()) hit[g.add(x, y)] = true;
  }
  std::vector<Elem> out;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.push_back(static_cast<Elem>(i));
  }
  return GroupSubset(g, std::move(out));
}

MinimalityResult is_minimal_complement(const GroupSubset& w,
                                       const GroupSubset& c) {
  require_same_group(w, c);
  require_nonempty(w, "W");
  require_nonempty(c, "C");
  const auto count = representation_counts(c.elements(), w);
  if (!covers_all(count)) return {MinimalityKind::kNotComplement, {}};
  for (Elem ci : c.elements()) {
    if (removable(w.group(), ci, w, count)) {
      return {MinimalityKind::kComplementNotMinimal, ci};
    }
  }
  return {MinimalityKind::kMinimal, {}};
}

GroupSubset extract_minimal(const GroupSubset& w, const GroupSubset& c) {
  require_same_group(w, c);
  require_nonempty(w, "W");
  auto count = representation_counts(c.elements(), w);
  if (!covers_all(count)) {
    throw Error(ErrorCode::kNotAComplement, "W + C does not cover the group");
  }
  const FiniteAbelianGroup& g = w.group();
  std::vector<Elem> kept;
  for (Elem ci : c.elements()) {
    if (removable(g, ci, w, count)) {
      for (Elem wi : w.elements()) --count[g.add(ci, wi)];
    } else {
      kept.push_back(ci);
    }
  }
  return GroupSubset(g, std::move(kept));
}

GroupSubset power_sumset(const GroupSubset& a, std::size_t r) {
  GroupSubset acc(a.group(), {a.group().zero()});
  for (std::size_t i = 0; i < r; ++i) {
    GroupSubset next = sumset(acc, a);
    if (next == acc) break;
    acc = std::move(next);
  }
  return acc;
}

GroupSubset minimal_r_net(const GroupSubset& a, std::size_t r) {
  const FiniteAbelianGroup& g = a.group();
  if (!a.contains(g.zero())) {
    throw Error(ErrorCode::kNotSymmetric, "A must contain the identity");
  }
  for (Elem e : a.elements()) {
    if (!a.contains(g.negate(e))) {
      throw Error(ErrorCode::kNotSymmetric, "A is not closed under negation");
    }
  }
  if (power_sumset(a, g.order()).size() != g.order()) {
    throw Error(ErrorCode::kNotGenerating, "A does not generate the group");
  }
  return extract_minimal(power_sumset(a, r), GroupSubset::whole(g));
}

std::optional<PairCertificate> check_pair_conditions(const GroupSubset& q1,
                                                     const GroupSubset& q,
                                                     const GroupSubset& n) {
  require_same_group(q1, q);
  require_same_group(q1, n);
  if (n.empty()) return std::nullopt;
  const FiniteAbelianGroup& g = q.group();
  std::vector<Elem> s = q.elements();
  s.insert(s.end(), q1.elements().begin(), q1.elements().end());
  const GroupSubset united(g, std::move(s));

  const auto count = representation_counts(n.elements(), united);
  if (!covers_all(count)) return std::nullopt;

  PairCertificate cert{n, {}};
  for (Elem ni : n.elements()) {
    // n + q is hit by (N \ {n}) + S iff it has a representation other than
    // n + q itself; representations through n are unique per summand.
    std::optional<Elem> found;
    for (Elem qi : q1.elements()) {
      if (count[g.add(ni, qi)] == 1) {
        found = qi;
        break;
      }
    }
    if (!found) return std::nullopt;
    cert.witness.emplace(ni, *found);
  }
  return cert;
}

bool is_valid_pair_certificate(const GroupSubset& q1, const GroupSubset& q,
                               const PairCertificate& cert) {
  const auto checked = check_pair_conditions(q1, q, cert.n);
  if (!checked) return false;
  if (cert.witness.size() != cert.n.size()) return false;
  // Any valid witness is accepted, not only the first one.
  const FiniteAbelianGroup& g = q.group();
  std::vector<Elem> s = q.elements();
  s.insert(s.end(), q1.elements().begin(), q1.elements().end());
  const GroupSubset united(g, std::move(s));
  const auto count = representation_counts(cert.n.elements(), united);
  for (const auto& [ni, qi] : cert.witness) {
    if (!cert.n.contains(ni) || !q1.contains(qi)) return false;
    if (count[g.add(ni, qi)] != 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> translate_masks(const GroupSubset& s) {
  const FiniteAbelianGroup& g = s.group();
  if (g.order() > kMaxSearchOrder) {
    throw Error(ErrorCode::kSearchTooLarge, "mask needs order <= 64");
  }
  std::vector<std::uint64_t> out(g.order(), 0);
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (Elem e : s.elements()) {
      out[x] |= std::uint64_t{1} << g.add(static_cast<Elem>(x), e);
    }
  }
  return out;
}

std::optional<std::uint64_t> first_subset(
    std::size_t order, const std::function<bool(std::uint64_t)>& accept) {
  if (order > kMaxSearchOrder) {
    throw Error(ErrorCode::kSearchTooLarge, "subset search needs order <= 64");
  }
  std::vector<std::size_t> idx;
  for (std::size_t k = 1; k <= order; ++k) {
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (std::size_t i : idx) mask |= std::uint64_t{1} << i;
      if (accept(mask)) return mask;
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == order - k + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<PairCertificate> structured_pair_certificate(
    const GroupSubset& q1, const GroupSubset& q) {
  check_pair_inputs(q1, q);
  const FiniteAbelianGroup& g = q.group();
  std::vector<Elem> s_elems = q.elements();
  s_elems.insert(s_elems.end(), q1.elements().begin(), q1.elements().end());
  const GroupSubset s(g, std::move(s_elems));

  if (s.size() == g.order()) {
    return check_pair_conditions(q1, q, GroupSubset(g, {g.zero()}));
  }

  // S = s0 + H for a subgroup H: one representative per coset of H.
  const Elem s0 = s.elements().front();
  std::vector<Elem> h;
  for (Elem e : s.elements()) h.push_back(g.sub(e, s0));
  const GroupSubset subgroup(g, h);
  bool closed = true;
  for (Elem a : subgroup.elements()) {
    for (Elem b : subgroup.elements()) {
      if (!subgroup.contains(g.add(a, b))) {
        closed = false;
        break;
      }
    }
    if (!closed) break;
  }
  if (closed) {
    std::vector<bool> seen(g.order(), false);
    std::vector<Elem> reps;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (seen[x]) continue;
      reps.push_back(static_cast<Elem>(x));
      for (Elem e : subgroup.elements()) {
        seen[g.add(static_cast<Elem>(x), e)] = true;
      }
    }
    return check_pair_conditions(q1, q, GroupSubset(g, std::move(reps)));
  }

  const bool elementary_two = std::all_of(
      g.factors().begin(), g.factors().end(), [](Int a) { return a == 2; });
  if (elementary_two && s.size() + 1 == g.order()) {
    Elem missing = 0;
    while (s.contains(missing)) ++missing;
    const Elem q0 = q1.elements().front();
    return check_pair_conditions(
        q1, q, GroupSubset(g, {g.zero(), g.sub(missing, q0)}));
  }
  return std::nullopt;
}

std::optional<PairCertificate> pair_minimal_complement(
    const GroupSubset& q1, const GroupSubset& q, const SearchOptions& options) {
  check_pair_inputs(q1, q);
  const FiniteAbelianGroup& g = q.group();
  if (g.order() > options.cap || g.order() > kMaxSearchOrder) {
    if (auto cert = structured_pair_certificate(q1, q)) return cert;
    throw Error(ErrorCode::kSearchTooLarge,
                "quotient order " + std::to_string(g.order()) +
                    " exceeds the search cap " + std::to_string(options.cap));
  }

  std::vector<Elem> s_elems = q.elements();
  s_elems.insert(s_elems.end(), q1.elements().begin(), q1.elements().end());
  const GroupSubset s(g, std::move(s_elems));
  const auto shift_s = translate_masks(s);
  const auto shift_q1 = translate_masks(q1);
  const std::size_t order = g.order();
  const std::uint64_t full =
      order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;

  std::vector<std::size_t> members;
  std::vector<std::uint64_t> prefix, suffix;
  auto accept = [&](std::uint64_t mask) {
    members.clear();
    for (std::size_t i = 0; i < order; ++i) {
      if (mask >> i & 1) members.push_back(i);
    }
    const std::size_t k = members.size();
    prefix.assign(k + 1, 0);
    suffix.assign(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      prefix[i + 1] = prefix[i] | shift_s[members[i]];
    }
    if (prefix[k] != full) return false;
    for (std::size_t i = k; i-- > 0;) {
      suffix[i] = suffix[i + 1] | shift_s[members[i]];
    }
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t others = prefix[i] | suffix[i + 1];
      if ((shift_q1[members[i]] & ~others) == 0) return false;
    }
    return true;
  };
  const auto found = first_subset(order, accept);
  if (!found) return std::nullopt;
  return certificate_from_mask(q1, q, *found);
}

GroupSubset product_subset(std::span<const GroupSubset> parts) {
  std::vector<FiniteAbelianGroup> groups;
  for (const auto& p : parts) groups.push_back(p.group());
  const FiniteAbelianGroup g = product_group(groups);
  std::vector<std::vector<Int>> tuples = {{}};
  for (const auto& p : parts) {
    std::vector<std::vector<Int>> next;
    for (const auto& prefix : tuples) {
      for (Elem e : p.elements()) {
        std::vector<Int> t = prefix;
        const std::vector<Int> tail = p.group().tuple(e);
        t.insert(t.end(), tail.begin(), tail.end());
        next.push_back(std::move(t));
      }
    }
    tuples = std::move(next);
  }
  return GroupSubset::from_tuples(g, tuples);
}

std::pair<GroupSubset, GroupSubset> product_minimal(
    std::span<const ProductPart> parts) {
  if (parts.empty()) {
    throw Error(ErrorCode::kBadParams, "product needs at least one part");
  }
  std::vector<GroupSubset> ws, ms;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    const auto res = is_minimal_complement(part.w, part.m);
    if (res.kind != MinimalityKind::kMinimal) {
      throw Error(ErrorCode::kNotMinimalInput,
                  "part " + std::to_string(i) +
                      " is not a minimal complement pair",
                  i);
    }
    ws.push_back(part.w);
    ms.push_back(part.m);
  }
  return {product_subset(ws), product_subset(ms)};
}

}  // namespace mincomp::finitegrp
