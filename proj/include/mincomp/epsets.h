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

// Eventually periodic subsets of Z^d, described as
//
//   W = sporadic u (base + cone),   cone = N u_1 + ... + N u_d,
//
// and their canonical decomposition.

#ifndef MINCOMP_EPSETS_H_
#define MINCOMP_EPSETS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mincomp/finitegrp.h"
#include "mincomp/point.h"
#include "mincomp/zlattice.h"

namespace mincomp::epsets {

class EPSet {
 public:
  // Every point must have basis.dim() coordinates. `canonical` is a claim
  // made by canonicalize(); user code normally leaves it false.
  EPSet(zlattice::PeriodBasis basis, PointSet sporadic, PointSet base,
        bool canonical = false);

  const zlattice::PeriodBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.dim(); }
  const PointSet& sporadic() const { return sporadic_; }
  const PointSet& base() const { return base_; }
  bool canonical() const { return canonical_; }

  // Same set of points translated by v.
  EPSet translated(std::span<const Int> v) const;

  friend bool operator==(const EPSet&, const EPSet&) = default;

 private:
  zlattice::PeriodBasis basis_;
  PointSet sporadic_;
  PointSet base_;
  bool canonical_ = false;
};

bool member(const EPSet& w, std::span<const Int> x);

// x + cone contained in W.
bool cone_saturates(const EPSet& w, std::span<const Int> x);

// Unique canonical description of the same point set. kEmptyBase when the
// raw base is empty.
EPSet canonicalize(const EPSet& raw);

struct ResidueProfile {
  zlattice::QuotientStructure quotient;
  std::vector<std::size_t> q;  // residues of the base, sorted
  std::vector<Point> w0;       // sporadic points whose residue is in q
  std::vector<Point> w1;       // sporadic points whose residue is not
  bool is_periodic = false;
};

// Requires a canonical set (kNotCanonical otherwise).
ResidueProfile residue_profile(const EPSet& w);

// The quotient as a finite group. Residue indices and group indices agree.
finitegrp::FiniteAbelianGroup residue_group(
    const zlattice::QuotientStructure& q);
finitegrp::GroupSubset q_subset(const ResidueProfile& p);
finitegrp::GroupSubset w1_subset(const ResidueProfile& p);

}  // namespace mincomp::epsets

#endif  // MINCOMP_EPSETS_H_
