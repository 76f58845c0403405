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

// Shared helpers for the test binaries: conversions to the reference
// implementation's plain types and small random generators.

#ifndef MINCOMP_TESTS_TEST_UTIL_H_
#define MINCOMP_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "mincomp/epsets.h"
#include "mincomp/finitegrp.h"
#include "mincomp/oracle.h"
#include "mincomp/point.h"
#include "mincomp/zlattice.h"

namespace mincomp::testing {

inline oracle::NaiveGroup naive(const finitegrp::FiniteAbelianGroup& g) {
  return {g.factors()};
}

inline oracle::TupleSet tuples(const finitegrp::GroupSubset& s) {
  const auto t = s.tuples();
  return {t.begin(), t.end()};
}

inline oracle::NaiveEPSet naive(const epsets::EPSet& w) {
  return {w.basis().columns(),
          {w.sporadic().begin(), w.sporadic().end()},
          {w.base().begin(), w.base().end()}};
}

inline finitegrp::GroupSubset subset_from_mask(
    const finitegrp::FiniteAbelianGroup& g, std::uint64_t mask) {
  std::vector<finitegrp::Elem> e;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (mask >> i & 1) e.push_back(static_cast<finitegrp::Elem>(i));
  }
  return finitegrp::GroupSubset(g, std::move(e));
}

inline zlattice::PeriodBasis axes(std::size_t d, Int k = 1) {
  std::vector<Point> cols(d, Point(d, 0));
  for (std::size_t j = 0; j < d; ++j) cols[j][j] = k;
  return zlattice::PeriodBasis(cols);
}

// Integer determinant by Laplace expansion, rows given explicitly.
inline Int small_det(const std::vector<Point>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Point> minor;
    for (std::size_t i = 1; i < n; ++i) {
      Point row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(row);
    }
    det += (j % 2 ? -1 : 1) * m[0][j] * small_det(minor);
  }
  return det;
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors,
// factor_k = d_k / d_{k-1}. Independent of the elimination code.
inline std::vector<Int> invariant_factors_by_minors(
    const std::vector<Point>& columns) {
  const std::size_t n = columns.size();
  std::vector<Point> a(n, Point(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = columns[j][i];
  }
  std::vector<Int> divisors = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Int g = 0;
    // All k-subsets of rows and columns.
    std::vector<bool> rs(n, false), cs(n, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        std::vector<Point> sub;
        for (std::size_t i = 0; i < n; ++i) {
          if (!rs[i]) continue;
          Point row;
          for (std::size_t j = 0; j < n; ++j) {
            if (cs[j]) row.push_back(a[i][j]);
          }
          sub.push_back(row);
        }
        g = std::gcd(g, small_det(sub));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    divisors.push_back(g);
  }
  std::vector<Int> factors;
  for (std::size_t k = 1; k <= n; ++k) {
    const Int f = divisors[k] / divisors[k - 1];
    if (f > 1) factors.push_back(f);
  }
  return factors;
}

inline Point random_point(std::mt19937& rng, std::size_t d, Int lo, Int hi) {
  std::uniform_int_distribution<Int> dist(lo, hi);
  Point p(d);
  for (Int& x : p) x = dist(rng);
  return p;
}

// Nonsingular basis with small entries and |det| <= max_order.
inline zlattice::PeriodBasis random_basis(std::mt19937& rng, std::size_t d,
                                          Int max_order) {
  while (true) {
    std::vector<Point> cols;
    for (std::size_t j = 0; j < d; ++j) cols.push_back(random_point(rng, d, -3, 3));
    std::vector<Point> rows(d, Point(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) rows[i][j] = cols[j][i];
    }
    const Int det = small_det(rows);
    if (det != 0 && std::abs(det) <= max_order) {
      return zlattice::PeriodBasis(cols);
    }
  }
}

}  // namespace mincomp::testing

#endif  // MINCOMP_TESTS_TEST_UTIL_H_
