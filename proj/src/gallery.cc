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

#include "mincomp/gallery.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "mincomp/errors.h"

namespace mincomp::gallery {
namespace {

zlattice::PeriodBasis scaled_axes(std::size_t d, Int k) {
  std::vector<Point> cols(d, Point(d, 0));
  for (std::size_t j = 0; j < d; ++j) cols[j][j] = k;
  return zlattice::PeriodBasis(std::move(cols));
}

Int abs_value(Int x) { return x < 0 ? checked_sub(0, x) : x; }

}  // namespace

epsets::EPSet example_infinite(const InfiniteParams& p) {
  const std::size_t d = p.dim;
  if (d < 1) throw Error(ErrorCode::kBadParams, "dimension must be >= 1");
  PointSet sporadic = {Point(d, 0)};
  PointSet base;
  switch (p.variant) {
    case 1:
    case 2: {
      if (p.axis < 1 || p.axis > d) {
        throw Error(ErrorCode::kBadParams, "axis must lie in [1, d]");
      }
      const Int k = p.variant == 2 ? 2 : p.k;
      if (k < 2) {
        // k = 1 leaves the base empty.
        throw Error(ErrorCode::kBadParams, "variant 1 needs k >= 2");
      }
      for (Int t = 1; t < k; ++t) {
        Point e(d, 0);
        e[p.axis - 1] = t;
        base.insert(e);
      }
      return epsets::EPSet(scaled_axes(d, k), sporadic, base);
    }
    case 3: {
      if (d < 2) throw Error(ErrorCode::kBadParams, "variant 3 needs d >= 2");
      if (d > 20) throw Error(ErrorCode::kBadParams, "dimension too large");
      const std::size_t want = (std::size_t{1} << d) - 2;
      std::set<Point> residues;
      for (const Point& x : p.f) {
        require_dim(x, d);
        Point r(d);
        for (std::size_t i = 0; i < d; ++i) r[i] = floor_mod(x[i], 2);
        if (r == Point(d, 0)) {
          throw Error(ErrorCode::kBadParams,
                      "F must avoid the residue of the origin mod 2");
        }
        residues.insert(r);
        base.insert(x);
      }
      if (p.f.size() != want || residues.size() != want) {
        throw Error(ErrorCode::kBadParams,
                    "F needs 2^d - 2 points with distinct residues mod 2");
      }
      return epsets::EPSet(scaled_axes(d, 2), sporadic, base);
    }
    default:
      throw Error(ErrorCode::kBadParams, "variant must be 1, 2 or 3");
  }
}

bool diagonal_member(std::span<const Int> x) {
  if (x.empty()) return false;
  const Int n = abs_value(x[0]);
  return std::all_of(x.begin(), x.end(),
                     [n](Int v) { return abs_value(v) == n; });
}

bool hyperplane_member(std::span<const Int> x, std::size_t axis) {
  return axis >= 1 && axis <= x.size() && x[axis - 1] == 0;
}

DiagonalWindows diagonal_hyperplane_windows(std::size_t d, std::size_t axis,
                                            const Box& box) {
  if (d < 2 || axis < 1 || axis > d || box.dim() != d) {
    throw Error(ErrorCode::kBadParams,
                "need d >= 2, 1 <= axis <= d and a d-dimensional box");
  }
  DiagonalWindows out;
  for (const Point& p : box_points(box)) {
    if (diagonal_member(p)) out.diagonal.push_back(p);
    if (hyperplane_member(p, axis)) out.hyperplane.push_back(p);
  }
  return out;
}

Polynomial Polynomial::parse(std::string_view text, std::size_t vars) {
  if (vars == 0) throw Error(ErrorCode::kBadParams, "need at least one variable");
  Polynomial poly;
  poly.vars_ = vars;
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw Error(ErrorCode::kBadParams, "empty polynomial");
  auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::kBadParams,
                "polynomial '" + std::string(text) + "': " + why);
  };
  auto read_uint = [&](std::size_t& i) {
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
      bad("expected a number");
    }
    Int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = checked_add(checked_mul(v, 10), s[i] - '0');
      ++i;
    }
    return v;
  };

  std::size_t i = 0;
  while (i < s.size()) {
    Int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      bad("expected '+' or '-'");
    }
    Int coeff = 1;
    std::vector<unsigned> exps(vars, 0);
    bool any = false;
    while (true) {
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coeff = checked_mul(coeff, read_uint(i));
      } else if (i < s.size() && (s[i] == 'n' || s[i] == 'x')) {
        ++i;
        std::size_t var = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
          var = static_cast<std::size_t>(read_uint(i));
        } else if (vars != 1) {
          bad("bare variable needs a single-variable polynomial");
        }
        if (var < 1 || var > vars) bad("variable index out of range");
        unsigned e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = static_cast<unsigned>(read_uint(i));
        }
        exps[var - 1] += e;
      } else {
        bad("unexpected character");
      }
      any = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      // "2n" reads as 2*n.
      if (i < s.size() && (s[i] == 'n' || s[i] == 'x')) continue;
      break;
    }
    if (!any) bad("empty term");
    Int& slot = poly.terms_[exps];
    slot = checked_add(slot, checked_mul(sign, coeff));
  }
  return poly;
}

Int Polynomial::eval(std::span<const Int> args) const {
  if (args.size() != vars_) {
    throw Error(ErrorCode::kBadParams, "wrong number of polynomial arguments");
  }
  Int total = 0;
  for (const auto& [exps, coeff] : terms_) {
    Int term = coeff;
    for (std::size_t v = 0; v < vars_; ++v) {
      for (unsigned e = 0; e < exps[v]; ++e) term = checked_mul(term, args[v]);
    }
    total = checked_add(total, term);
  }
  return total;
}

PolynomialImage polynomial_image(const std::vector<Polynomial>& f,
                                 const Box& domain, Int target_lo,
                                 Int target_hi) {
  if (f.empty()) throw Error(ErrorCode::kBadParams, "no polynomials");
  const std::size_t m = f.front().vars();
  for (const Polynomial& p : f) {
    if (p.vars() != m) throw Error(ErrorCode::kBadParams, "arity mismatch");
  }
  if (domain.dim() != m) {
    throw Error(ErrorCode::kBadParams, "domain box has the wrong dimension");
  }
  if (target_lo > target_hi) {
    throw Error(ErrorCode::kBadParams, "empty target interval");
  }
  const std::size_t d = f.size();
  PolynomialImage out;
  std::vector<std::set<Int>> values(d);
  for (const Point& n : box_points(domain)) {
    Point y(d);
    for (std::size_t i = 0; i < d; ++i) {
      y[i] = f[i].eval(n);
      values[i].insert(y[i]);
    }
    out.points.insert(std::move(y));
  }
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Int> hit;
    for (Int v : values[i]) {
      if (v >= target_lo && v <= target_hi) hit.push_back(v);
    }
    const bool onto =
        static_cast<Int>(hit.size()) == target_hi - target_lo + 1;
    std::size_t on_plane = 0;
    for (const Point& y : out.points) on_plane += y[i] == 0 ? 1 : 0;
    out.hit.push_back(std::move(hit));
    out.surjective_on_target.push_back(onto);
    out.hyperplane_hits.push_back(on_plane);
    out.minimality_plausible.push_back(onto && on_plane == 1);
  }
  return out;
}

epsets::EPSet ksy_adapter(Int m, const std::vector<Int>& x,
                          const std::vector<Int>& y0,
                          const std::vector<Int>& y1) {
  if (m < 1) throw Error(ErrorCode::kFormViolation, "period must be >= 1");
  std::set<Int> xs;
  for (Int v : x) {
    if (v < 0 || v >= m) {
      throw Error(ErrorCode::kFormViolation, "X must lie in [0, m)");
    }
    xs.insert(v);
  }
  PointSet sporadic, base;
  for (Int v : xs) base.insert({v});
  for (Int v : y0) {
    if (v >= 0 || !xs.count(floor_mod(v, m))) {
      throw Error(ErrorCode::kFormViolation,
                  "Y0 must be negative with residues in X");
    }
    sporadic.insert({v});
  }
  for (Int v : y1) {
    if (xs.count(floor_mod(v, m))) {
      throw Error(ErrorCode::kFormViolation, "Y1 residues must avoid X");
    }
    sporadic.insert({v});
  }
  return epsets::EPSet(zlattice::PeriodBasis(std::vector<Point>{Point{m}}),
                       std::move(sporadic),
                       std::move(base));
}

}  // namespace mincomp::gallery
