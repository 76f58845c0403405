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

// Full-rank period lattices L = Z u_1 + ... + Z u_d in Z^d, coordinates with
// respect to the periods, and the finite quotient Z^d / L.

#ifndef MINCOMP_ZLATTICE_H_
#define MINCOMP_ZLATTICE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mincomp/point.h"

namespace mincomp::zlattice {

// Period vectors u_1..u_d of a full-rank sublattice of Z^d. Construction
// fails with kSingularBasis when the vectors are linearly dependent.
class PeriodBasis {
 public:
  explicit PeriodBasis(std::vector<Point> columns);

  std::size_t dim() const { return columns_.size(); }
  const std::vector<Point>& columns() const { return columns_; }
  // Signed determinant of the matrix whose columns are the periods.
  Int determinant() const { return det_; }

  // Sum of coeffs[i] * u_i.
  Point combine(std::span<const Int> coeffs) const;

  // Coordinates with respect to the periods when v lies in L.
  std::optional<Point> coords(std::span<const Int> v) const;
  // v in N u_1 + ... + N u_d.
  bool in_cone(std::span<const Int> v) const;

  friend bool operator==(const PeriodBasis& a, const PeriodBasis& b) {
    return a.columns_ == b.columns_;
  }

 private:
  std::vector<Point> columns_;
  Int det_ = 0;
  // adjugate_[i][j]: row i of adj(U), so coords = adj(U) v / det.
  std::vector<Point> adjugate_;
};

std::optional<Point> cone_coords(const PeriodBasis& basis,
                                 std::span<const Int> v);

// Z^d / L realized through the Smith normal form P U Q = diag(d_1..d_d):
// v maps to (P v) reduced modulo the nontrivial d_i. Residue indices
// enumerate the reduced tuples in lexicographic order (first factor most
// significant); reps()[k] is P^-1 applied to the k-th tuple.
class QuotientStructure {
 public:
  explicit QuotientStructure(PeriodBasis basis);

  const PeriodBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.dim(); }
  std::size_t order() const { return order_; }
  // a_1 | a_2 | ..., all > 1; empty for the trivial quotient.
  const std::vector<Int>& invariant_factors() const { return factors_; }
  const std::vector<Point>& reps() const { return reps_; }

  std::size_t project(std::span<const Int> v) const;
  // Residue tuple (one entry per invariant factor) of a residue index.
  std::vector<Int> tuple(std::size_t residue) const;
  std::size_t index_of_tuple(std::span<const Int> tuple) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;

 private:
  std::vector<Int> snf_coords(std::span<const Int> v) const;

  PeriodBasis basis_;
  std::size_t order_ = 1;
  std::vector<Int> factors_;
  std::vector<std::size_t> factor_rows_;  // SNF rows carrying factors_
  std::vector<Point> p_;                  // rows of P
  std::vector<Point> p_inv_;              // rows of P^-1
  std::vector<Point> reps_;
};

QuotientStructure quotient_structure(const PeriodBasis& basis);
std::size_t project(const QuotientStructure& q, std::span<const Int> v);

}  // namespace mincomp::zlattice

#endif  // MINCOMP_ZLATTICE_H_
