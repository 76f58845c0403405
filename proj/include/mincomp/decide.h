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

// Existence of minimal complements for eventually periodic sets, decided at
// the level of the finite quotient Z^d / L.

#ifndef MINCOMP_DECIDE_H_
#define MINCOMP_DECIDE_H_

#include <cstddef>
#include <optional>
#include <string_view>

#include "mincomp/epsets.h"
#include "mincomp/finitegrp.h"
#include "mincomp/zlattice.h"

namespace mincomp::decide {

enum class Outcome { kExists, kNotExists, kUnknown };

enum class Reason {
  kCertificate,          // Exists: the pair certificate below
  kPeriodic,             // no sporadic points at all
  kEmptyW1,              // every sporadic residue already occurs in the base
  kSingleSporadicIff,    // one point in W1 and no certificate
  kNecessaryFails,       // the necessary residue condition has no solution
  kOpen,                 // Unknown
};

std::string_view outcome_name(Outcome o);  // "exists", "not_exists", "unknown"
std::string_view reason_name(Reason r);    // "certificate", "periodic", ...

struct Decision {
  Outcome outcome;
  Reason reason;
  epsets::EPSet canonical;
  std::optional<finitegrp::PairCertificate> certificate;  // kExists
  std::optional<finitegrp::GroupSubset> necessary_set;    // kUnknown
};

// Search cap from MINCOMP_SEARCH_CAP when set (clamped to 64), else 24.
finitegrp::SearchOptions default_search_options();

// First N in (cardinality, lex) order with N + (Q u pi(W1)) = G and, for
// every n, some q in pi(W1) with n + q outside N + Q. Absent when W1 is
// empty or nothing qualifies.
std::optional<finitegrp::GroupSubset> necessary_condition(
    const epsets::ResidueProfile& profile,
    const finitegrp::SearchOptions& options = default_search_options());

// Pair certificate for (pi(W1), Q). kEmptyW1 when W1 is empty.
std::optional<finitegrp::PairCertificate> sufficient_condition(
    const epsets::ResidueProfile& profile,
    const finitegrp::SearchOptions& options = default_search_options());

Decision decide(const epsets::EPSet& w,
                const finitegrp::SearchOptions& options =
                    default_search_options());

// Present when pi(W) is onto the quotient and some residue class meets W in
// exactly one point; L itself is then a minimal complement.
struct LatticeCertificate {
  std::size_t residue;
  Point point;
};
std::optional<LatticeCertificate> lattice_fast_path(const epsets::EPSet& w);

// One canonical representative per coset of L'.
PointSet sublattice_minimal_complement(const zlattice::PeriodBasis& lattice);

}  // namespace mincomp::decide

#endif  // MINCOMP_DECIDE_H_
