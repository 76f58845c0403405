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

#include "mincomp/decide.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "mincomp/errors.h"

namespace mincomp::decide {

using finitegrp::Elem;
using finitegrp::GroupSubset;

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kExists: return "exists";
    case Outcome::kNotExists: return "not_exists";
    case Outcome::kUnknown: return "unknown";
  }
  return "?";
}

std::string_view reason_name(Reason r) {
  switch (r) {
    case Reason::kCertificate: return "certificate";
    case Reason::kPeriodic: return "periodic";
    case Reason::kEmptyW1: return "empty_w1";
    case Reason::kSingleSporadicIff: return "single_w1_no_certificate";
    case Reason::kNecessaryFails: return "necessary_condition_fails";
    case Reason::kOpen: return "open";
  }
  return "?";
}

finitegrp::SearchOptions default_search_options() {
  finitegrp::SearchOptions opts;
  if (const char* env = std::getenv("MINCOMP_SEARCH_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0) {
      opts.cap = std::min<std::size_t>(static_cast<std::size_t>(v),
                                       finitegrp::kMaxSearchOrder);
    }
  }
  return opts;
}

std::optional<GroupSubset> necessary_condition(
    const epsets::ResidueProfile& profile,
    const finitegrp::SearchOptions& options) {
  if (profile.w1.empty()) return std::nullopt;
  const GroupSubset q = epsets::q_subset(profile);
  const GroupSubset q1 = epsets::w1_subset(profile);
  const auto& g = q.group();
  if (g.order() > options.cap || g.order() > finitegrp::kMaxSearchOrder) {
    throw Error(ErrorCode::kSearchTooLarge,
                "quotient order " + std::to_string(g.order()) +
                    " exceeds the search cap " + std::to_string(options.cap));
  }
  std::vector<Elem> s_elems = q.elements();
  s_elems.insert(s_elems.end(), q1.elements().begin(), q1.elements().end());
  const auto shift_s = finitegrp::translate_masks(GroupSubset(g, s_elems));
  const auto shift_q = finitegrp::translate_masks(q);
  const auto shift_q1 = finitegrp::translate_masks(q1);
  const std::size_t order = g.order();
  const std::uint64_t full =
      order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;

  auto accept = [&](std::uint64_t mask) {
    std::uint64_t cover = 0, nq = 0;
    for (std::size_t i = 0; i < order; ++i) {
      if (!(mask >> i & 1)) continue;
      cover |= shift_s[i];
      nq |= shift_q[i];
    }
    if (cover != full) return false;
    for (std::size_t i = 0; i < order; ++i) {
      if ((mask >> i & 1) && (shift_q1[i] & ~nq) == 0) return false;
    }
    return true;
  };
  const auto found = finitegrp::first_subset(order, accept);
  if (!found) return std::nullopt;
  std::vector<Elem> n;
  for (std::size_t i = 0; i < order; ++i) {
    if (*found >> i & 1) n.push_back(static_cast<Elem>(i));
  }
  return GroupSubset(g, std::move(n));
}

std::optional<finitegrp::PairCertificate> sufficient_condition(
    const epsets::ResidueProfile& profile,
    const finitegrp::SearchOptions& options) {
  if (profile.w1.empty()) {
    throw Error(ErrorCode::kEmptyW1, "no sporadic point outside base residues");
  }
  return finitegrp::pair_minimal_complement(epsets::w1_subset(profile),
                                            epsets::q_subset(profile), options);
}

Decision decide(const epsets::EPSet& w,
                const finitegrp::SearchOptions& options) {
  epsets::EPSet canon = w.canonical() ? w : epsets::canonicalize(w);
  const epsets::ResidueProfile profile = epsets::residue_profile(canon);
  if (profile.w1.empty()) {
    return {Outcome::kNotExists,
            profile.is_periodic ? Reason::kPeriodic : Reason::kEmptyW1,
            std::move(canon), std::nullopt, std::nullopt};
  }
  if (auto cert = sufficient_condition(profile, options)) {
    return {Outcome::kExists, Reason::kCertificate, std::move(canon),
            std::move(cert), std::nullopt};
  }
  if (profile.w1.size() == 1) {
    return {Outcome::kNotExists, Reason::kSingleSporadicIff, std::move(canon),
            std::nullopt, std::nullopt};
  }
  auto n = necessary_condition(profile, options);
  if (!n) {
    return {Outcome::kNotExists, Reason::kNecessaryFails, std::move(canon),
            std::nullopt, std::nullopt};
  }
  return {Outcome::kUnknown, Reason::kOpen, std::move(canon), std::nullopt,
          std::move(n)};
}

std::optional<LatticeCertificate> lattice_fast_path(const epsets::EPSet& w) {
  const zlattice::QuotientStructure q(w.basis());
  std::vector<bool> hit(q.order(), false), has_base(q.order(), false);
  for (const Point& b : w.base()) {
    const std::size_t r = q.project(b);
    hit[r] = has_base[r] = true;
  }
  std::map<std::size_t, std::vector<Point>> sporadic_by_residue;
  for (const Point& s : w.sporadic()) {
    const std::size_t r = q.project(s);
    hit[r] = true;
    sporadic_by_residue[r].push_back(s);
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return std::nullopt;
  for (const auto& [r, pts] : sporadic_by_residue) {
    if (!has_base[r] && pts.size() == 1) return LatticeCertificate{r, pts[0]};
  }
  return std::nullopt;
}

PointSet sublattice_minimal_complement(const zlattice::PeriodBasis& lattice) {
  const zlattice::QuotientStructure q(lattice);
  return PointSet(q.reps().begin(), q.reps().end());
}

}  // namespace mincomp::decide
