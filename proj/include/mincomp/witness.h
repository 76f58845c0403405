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

// Explicit minimal complements of eventually periodic sets.
//
// Given a pair certificate N for (pi(W1), Q), the candidate set is
// C = lift(N) + L. Its points are enumerated shell by shell, where the shell
// of c is the largest absolute coordinate of c - lift(c) with respect to the
// periods; inside a shell the order is lexicographic on those coordinates,
// then by residue index. Walking that order, c is dropped unless some
// x in (c + W1) whose residue avoids N + Q would lose its last
// representation from the current set. Every decision looks at finitely many
// points and is never revisited, so the first k shells of the result are the
// same whatever k is.
//
// Beam sets are the other kind of structured complement: finitely many
// points plus downward rays apex - t * dir.

#ifndef MINCOMP_WITNESS_H_
#define MINCOMP_WITNESS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "mincomp/epsets.h"
#include "mincomp/finitegrp.h"
#include "mincomp/point.h"
#include "mincomp/zlattice.h"

namespace mincomp::witness {

struct WitnessComplement {
  finitegrp::PairCertificate certificate;
  zlattice::PeriodBasis basis;
  std::size_t shells_processed = 0;  // decisions cover shells 0..k
  PointSet kept;
  PointSet removed;
};

// Shell of a point of C: max |gamma_i| for the period coordinates gamma of
// p - lift(p).
std::size_t shell_index(const zlattice::QuotientStructure& q,
                        const Point& p);

// `w` is canonicalized when needed. kInvalidCertificate unless `cert` is a
// valid certificate for (pi(W1), Q); kNegativeShells for shells < 0.
WitnessComplement build_witness(const epsets::EPSet& w,
                                const finitegrp::PairCertificate& cert,
                                long long shells);

// Continues the greedy up to `shells`; earlier decisions are untouched.
void extend_witness(const epsets::EPSet& w, WitnessComplement& wit,
                    std::size_t shells);

struct VerifyOptions {
  // Shells the verifier may add beyond wit.shells_processed while looking
  // for covering points.
  std::size_t extra_shell_cap = 64;
};

struct WindowReport {
  std::size_t core_points = 0;
  std::size_t covered = 0;
  std::vector<Point> coverage_failures;
  std::size_t kept_in_core = 0;
  std::vector<Point> minimality_failures;  // kept points without a witness
  std::size_t shells_used = 0;

  bool minimality_ok() const { return minimality_failures.empty(); }
  bool passed() const {
    return coverage_failures.empty() && minimality_failures.empty();
  }
};

// Checks every x in `core` against kept + W, and every kept point of the
// core for a point of (m + W1) that nothing else in the complement reaches.
// Throws kShellCapExceeded when a covering point is not found within the
// extra shell budget.
WindowReport verify_window(const epsets::EPSet& w,
                           const WitnessComplement& wit, const Box& core,
                           const VerifyOptions& options = {});

// "K 1 2" / "R 0 0" lines, kept first.
std::string format_witness_dump(const WitnessComplement& wit);
std::string format_report_text(const WindowReport& r);
// covered=<n> failures=<n> minimality_ok=<bool> ...
std::string format_report_machine(const WindowReport& r);

struct Beam {
  Point apex;
  Point direction;  // positive integer coordinates w.r.t. the periods
};

struct BeamSet {
  zlattice::PeriodBasis basis;
  PointSet finite_part;
  std::vector<Beam> beams;
};

// kMalformedBeam unless every direction has integer period coordinates that
// are all >= 1; kDimensionMismatch for wrong lengths.
void validate(const BeamSet& m);

// M + cone = Z^d. Beams run off to -infinity in every period coordinate, so
// this holds iff every residue class is met by some beam.
bool beam_complement_check(const BeamSet& m);

// M with the points of F taken out; cut beams leave their head in the
// finite part and continue below the last removed point.
BeamSet drop_finite(const BeamSet& m, const PointSet& f);

}  // namespace mincomp::witness

#endif  // MINCOMP_WITNESS_H_
