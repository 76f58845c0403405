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

#include "mincomp/zlattice.h"

#include <limits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "mincomp/errors.h"

namespace mincomp::zlattice {
namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using BigMatrix = std::vector<std::vector<BigInt>>;

Int to_int(const BigInt& x) {
  if (x > std::numeric_limits<Int>::max() ||
      x < std::numeric_limits<Int>::min()) {
    throw Error(ErrorCode::kOverflow, "lattice quantity exceeds 64 bits");
  }
  return static_cast<Int>(x);
}

// Row-major d x d matrix whose columns are the periods.
BigMatrix column_matrix(const std::vector<Point>& columns) {
  const std::size_t d = columns.size();
  BigMatrix m(d, std::vector<BigInt>(d));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = columns[j][i];
  }
  return m;
}

// Determinant and adjugate by Gauss-Jordan elimination over the rationals.
std::pair<BigInt, BigMatrix> determinant_and_adjugate(const BigMatrix& a) {
  const std::size_t d = a.size();
  std::vector<std::vector<BigRational>> m(d, std::vector<BigRational>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = BigRational(a[i][j]);
    m[i][d + i] = 1;
  }
  BigRational det = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && m[pivot][col] == 0) ++pivot;
    if (pivot == d) return {BigInt(0), {}};
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    const BigRational p = m[col][col];
    det *= p;
    for (auto& x : m[col]) x /= p;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const BigRational f = m[r][col];
      for (std::size_t c = 0; c < 2 * d; ++c) m[r][c] -= f * m[col][c];
    }
  }
  const BigInt det_int = boost::multiprecision::numerator(det);
  BigMatrix adj(d, std::vector<BigInt>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const BigRational v = m[i][d + j] * det;
      adj[i][j] = boost::multiprecision::numerator(v);
    }
  }
  return {det_int, adj};
}

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Smith normal form P A Q = diag(d_1 | d_2 | ...). Only the row transform P
// (and its inverse) is needed: P L = diag * Z^d.
struct SmithForm {
  std::vector<BigInt> diagonal;
  BigMatrix p;
  BigMatrix p_inv;
};

SmithForm smith_form(BigMatrix a) {
  const std::size_t d = a.size();
  BigMatrix p(d, std::vector<BigInt>(d)), p_inv(d, std::vector<BigInt>(d));
  for (std::size_t i = 0; i < d; ++i) p[i][i] = p_inv[i][i] = 1;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(p[i], p[j]);
    for (std::size_t r = 0; r < d; ++r) std::swap(p_inv[r][i], p_inv[r][j]);
  };
  // row_i += k * row_j
  auto add_row = [&](std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t c = 0; c < d; ++c) {
      a[i][c] += k * a[j][c];
      p[i][c] += k * p[j][c];
    }
    for (std::size_t r = 0; r < d; ++r) p_inv[r][j] -= k * p_inv[r][i];
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < d; ++c) {
      a[i][c] = -a[i][c];
      p[i][c] = -p[i][c];
    }
    for (std::size_t r = 0; r < d; ++r) p_inv[r][i] = -p_inv[r][i];
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < d; ++r) std::swap(a[r][i], a[r][j]);
  };
  // col_i += k * col_j
  auto add_col = [&](std::size_t i, std::size_t j, const BigInt& k) {
    for (std::size_t r = 0; r < d; ++r) a[r][i] += k * a[r][j];
  };

  for (std::size_t t = 0; t < d; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block; first in row-major
      // order on ties so already-diagonal inputs are left untouched.
      std::size_t pi = d, pj = d;
      for (std::size_t i = t; i < d; ++i) {
        for (std::size_t j = t; j < d; ++j) {
          if (a[i][j] == 0) continue;
          if (pi == d || big_abs(a[i][j]) < big_abs(a[pi][pj])) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == d) throw Error(ErrorCode::kSingularBasis, "singular matrix");
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);

      bool clean = true;
      for (std::size_t i = t + 1; i < d; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        add_row(i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        add_col(j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      for (std::size_t i = t + 1; i < d && clean; ++i) {
        for (std::size_t j = t + 1; j < d; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            add_row(t, i, 1);
            clean = false;
            break;
          }
        }
      }
      if (clean) break;
    }
    if (a[t][t] < 0) negate_row(t);
  }
  SmithForm out;
  for (std::size_t i = 0; i < d; ++i) out.diagonal.push_back(a[i][i]);
  out.p = std::move(p);
  out.p_inv = std::move(p_inv);
  return out;
}

std::vector<Point> to_int_matrix(const BigMatrix& m) {
  std::vector<Point> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const BigInt& x : m[i]) out[i].push_back(to_int(x));
  }
  return out;
}

Point mat_vec(const std::vector<Point>& m, std::span<const Int> v) {
  Point r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      acc = checked_add(acc, checked_mul(m[i][j], v[j]));
    }
    r[i] = acc;
  }
  return r;
}

}  // namespace

PeriodBasis::PeriodBasis(std::vector<Point> columns)
    : columns_(std::move(columns)) {
  const std::size_t d = columns_.size();
  if (d == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "period basis needs d >= 1");
  }
  for (const Point& c : columns_) require_dim(c, d);
  auto [det, adj] = determinant_and_adjugate(column_matrix(columns_));
  if (det == 0) {
    throw Error(ErrorCode::kSingularBasis,
                "period vectors satisfy a linear relation (det = 0)");
  }
  det_ = to_int(det);
  adjugate_ = to_int_matrix(adj);
}

Point PeriodBasis::combine(std::span<const Int> coeffs) const {
  require_dim(coeffs, dim());
  Point r(dim(), 0);
  for (std::size_t j = 0; j < dim(); ++j) {
    if (coeffs[j] == 0) continue;
    for (std::size_t i = 0; i < dim(); ++i) {
      r[i] = checked_add(r[i], checked_mul(coeffs[j], columns_[j][i]));
    }
  }
  return r;
}

std::optional<Point> PeriodBasis::coords(std::span<const Int> v) const {
  require_dim(v, dim());
  Point gamma(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    __int128 acc = 0;
    for (std::size_t j = 0; j < dim(); ++j) {
      acc += static_cast<__int128>(adjugate_[i][j]) * v[j];
    }
    if (acc % det_ != 0) return std::nullopt;
    gamma[i] = static_cast<Int>(acc / det_);
  }
  return gamma;
}

bool PeriodBasis::in_cone(std::span<const Int> v) const {
  const auto gamma = coords(v);
  if (!gamma) return false;
  for (Int g : *gamma) {
    if (g < 0) return false;
  }
  return true;
}

std::optional<Point> cone_coords(const PeriodBasis& basis,
                                 std::span<const Int> v) {
  return basis.coords(v);
}

QuotientStructure::QuotientStructure(PeriodBasis basis)
    : basis_(std::move(basis)) {
  const std::size_t d = basis_.dim();
  SmithForm snf = smith_form(column_matrix(basis_.columns()));
  p_ = to_int_matrix(snf.p);
  p_inv_ = to_int_matrix(snf.p_inv);
  for (std::size_t i = 0; i < d; ++i) {
    const Int di = to_int(snf.diagonal[i]);
    if (di > 1) {
      factors_.push_back(di);
      factor_rows_.push_back(i);
      order_ *= static_cast<std::size_t>(di);
    }
  }
  reps_.reserve(order_);
  for (std::size_t k = 0; k < order_; ++k) {
    const std::vector<Int> t = tuple(k);
    Point y(d, 0);
    for (std::size_t f = 0; f < factors_.size(); ++f) y[factor_rows_[f]] = t[f];
    reps_.push_back(mat_vec(p_inv_, y));
  }
}

std::vector<Int> QuotientStructure::snf_coords(std::span<const Int> v) const {
  require_dim(v, dim());
  const Point y = mat_vec(p_, v);
  std::vector<Int> t(factors_.size());
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    t[f] = floor_mod(y[factor_rows_[f]], factors_[f]);
  }
  return t;
}

std::size_t QuotientStructure::project(std::span<const Int> v) const {
  return index_of_tuple(snf_coords(v));
}

std::vector<Int> QuotientStructure::tuple(std::size_t residue) const {
  std::vector<Int> t(factors_.size());
  for (std::size_t f = factors_.size(); f-- > 0;) {
    const auto a = static_cast<std::size_t>(factors_[f]);
    t[f] = static_cast<Int>(residue % a);
    residue /= a;
  }
  return t;
}

std::size_t QuotientStructure::index_of_tuple(std::span<const Int> t) const {
  require_dim(t, factors_.size());
  std::size_t index = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) {
    index = index * static_cast<std::size_t>(factors_[f]) +
            static_cast<std::size_t>(floor_mod(t[f], factors_[f]));
  }
  return index;
}

std::size_t QuotientStructure::add(std::size_t a, std::size_t b) const {
  std::vector<Int> ta = tuple(a);
  const std::vector<Int> tb = tuple(b);
  for (std::size_t f = 0; f < ta.size(); ++f) ta[f] += tb[f];
  return index_of_tuple(ta);
}

std::size_t QuotientStructure::negate(std::size_t a) const {
  std::vector<Int> t = tuple(a);
  for (Int& x : t) x = -x;
  return index_of_tuple(t);
}

QuotientStructure quotient_structure(const PeriodBasis& basis) {
  return QuotientStructure(basis);
}

std::size_t project(const QuotientStructure& q, std::span<const Int> v) {
  return q.project(v);
}

}  // namespace mincomp::zlattice
