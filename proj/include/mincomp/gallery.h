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

// Named example families.

#ifndef MINCOMP_GALLERY_H_
#define MINCOMP_GALLERY_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mincomp/epsets.h"
#include "mincomp/point.h"

namespace mincomp::gallery {

// {0} u (S + cone) with periods along the axes:
//   variant 1: S = {e_i, ..., (k-1) e_i}, periods k e_j (k >= 2)
//   variant 2: S = {e_i}, periods 2 e_j
//   variant 3: S = F, periods 2 e_j, where F has 2^d - 2 points with
//              distinct nonzero residues mod 2 (d >= 2)
// `axis` is 1-based. kBadParams for anything else.
struct InfiniteParams {
  int variant = 2;
  std::size_t dim = 2;
  Int k = 2;
  std::size_t axis = 1;
  std::vector<Point> f;
};
epsets::EPSet example_infinite(const InfiniteParams& p);

// {(+-n, ..., +-n)}: every coordinate has the same absolute value.
bool diagonal_member(std::span<const Int> x);
// x_axis = 0, 1-based axis.
bool hyperplane_member(std::span<const Int> x, std::size_t axis);

struct DiagonalWindows {
  std::vector<Point> diagonal;
  std::vector<Point> hyperplane;
  // The diagonal has no eventually periodic presentation; this is a fixed
  // fact about the family, not something computed here.
  bool diagonal_eventually_periodic = false;
};
// kBadParams unless d >= 2, 1 <= axis <= d and box.dim() == d.
DiagonalWindows diagonal_hyperplane_windows(std::size_t d, std::size_t axis,
                                            const Box& box);

// Integer polynomial in variables n1..nm (n or x alone when m = 1; x1..xm
// also accepted). Terms like "3*n1^2*n2", "-n", "7".
class Polynomial {
 public:
  static Polynomial parse(std::string_view text, std::size_t vars);
  Int eval(std::span<const Int> args) const;
  std::size_t vars() const { return vars_; }

 private:
  std::size_t vars_ = 0;
  std::map<std::vector<unsigned>, Int> terms_;  // exponents -> coefficient
};

struct PolynomialImage {
  PointSet points;
  // Per coordinate: target values in [lo, hi] that are attained.
  std::vector<std::vector<Int>> hit;
  std::vector<bool> surjective_on_target;
  // Per coordinate i: |image n H_i|.
  std::vector<std::size_t> hyperplane_hits;
  // Per coordinate i: surjective on the target and exactly one image point
  // on H_i. Window evidence only, not a proof.
  std::vector<bool> minimality_plausible;
};
// kBadParams for empty input, mismatched arity or a bad domain.
PolynomialImage polynomial_image(const std::vector<Polynomial>& f,
                                 const Box& domain, Int target_lo,
                                 Int target_hi);

// W = (X + mN) u Y0 u Y1 in Z. kFormViolation unless X is in [0, m),
// Y0 is negative with residues in X, and Y1 residues avoid X.
epsets::EPSet ksy_adapter(Int m, const std::vector<Int>& x,
                          const std::vector<Int>& y0,
                          const std::vector<Int>& y1);

}  // namespace mincomp::gallery

#endif  // MINCOMP_GALLERY_H_
