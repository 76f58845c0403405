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

#include "mincomp/epsets.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

#include "mincomp/errors.h"

namespace mincomp::epsets {
namespace {

bool dominated(const Point& gamma, const std::vector<Point>& betas) {
  for (const Point& b : betas) {
    bool le = true;
    for (std::size_t i = 0; i < gamma.size() && le; ++i) le = b[i] <= gamma[i];
    if (le) return true;
  }
  return false;
}

bool in_base_cone(const EPSet& w, std::span<const Int> x) {
  for (const Point& b : w.base()) {
    if (w.basis().in_cone(sub(x, b))) return true;
  }
  return false;
}

}  // namespace

EPSet::EPSet(zlattice::PeriodBasis basis, PointSet sporadic, PointSet base,
             bool canonical)
    : basis_(std::move(basis)),
      sporadic_(std::move(sporadic)),
      base_(std::move(base)),
      canonical_(canonical) {
  for (const Point& p : sporadic_) require_dim(p, basis_.dim());
  for (const Point& p : base_) require_dim(p, basis_.dim());
}

EPSet EPSet::translated(std::span<const Int> v) const {
  require_dim(v, dim());
  PointSet s, b;
  for (const Point& p : sporadic_) s.insert(add(p, v));
  for (const Point& p : base_) b.insert(add(p, v));
  return EPSet(basis_, std::move(s), std::move(b), canonical_);
}

bool member(const EPSet& w, std::span<const Int> x) {
  require_dim(x, w.dim());
  if (w.sporadic().count(Point(x.begin(), x.end()))) return true;
  return in_base_cone(w, x);
}

bool cone_saturates(const EPSet& w, std::span<const Int> x) {
  require_dim(x, w.dim());
  const std::size_t d = w.dim();
  const zlattice::PeriodBasis& u = w.basis();

  // Same-residue base points, in coordinates relative to x.
  std::vector<Point> betas;
  for (const Point& b : w.base()) {
    if (auto beta = u.coords(sub(b, x))) betas.push_back(std::move(*beta));
  }
  // Pure-power criterion: the uncovered staircase is finite iff every axis
  // has a generator that is nonpositive off that axis.
  std::vector<Int> extent(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::optional<Int> best;
    for (const Point& beta : betas) {
      bool ok = true;
      for (std::size_t i = 0; i < d && ok; ++i) ok = i == j || beta[i] <= 0;
      if (!ok) continue;
      const Int p = std::max<Int>(beta[j], 0);
      if (!best || p < *best) best = p;
    }
    if (!best) return false;
    extent[j] = *best;
  }
  for (Int e : extent) {
    if (e == 0) return true;  // x itself is covered, so the whole cone is
  }

  // Every uncovered staircase point must be a sporadic point of W.
  Point gamma(d, 0);
  while (true) {
    if (!dominated(gamma, betas)) {
      const Point y = add(x, u.combine(gamma));
      if (!w.sporadic().count(y)) return false;
    }
    std::size_t i = 0;
    while (i < d && ++gamma[i] == extent[i]) gamma[i++] = 0;
    if (i == d) break;
  }
  return true;
}

EPSet canonicalize(const EPSet& raw) {
  if (raw.base().empty()) {
    throw Error(ErrorCode::kEmptyBase,
                "an eventually periodic set needs a nonempty base");
  }
  const zlattice::PeriodBasis& u = raw.basis();

  PointSet generators = raw.base();
  PointSet sporadic;
  for (const Point& s : raw.sporadic()) {
    if (in_base_cone(raw, s)) continue;
    if (cone_saturates(raw, s)) {
      generators.insert(s);
    } else {
      sporadic.insert(s);
    }
  }

  // Per-residue antichain of cone-minimal generators.
  PointSet base;
  for (const Point& g : generators) {
    bool minimal = true;
    for (const Point& h : generators) {
      if (h != g && u.in_cone(sub(g, h))) {
        minimal = false;
        break;
      }
    }
    if (minimal) base.insert(g);
  }
  return EPSet(u, std::move(sporadic), std::move(base), true);
}

finitegrp::FiniteAbelianGroup residue_group(
    const zlattice::QuotientStructure& q) {
  return finitegrp::FiniteAbelianGroup(q.invariant_factors());
}

ResidueProfile residue_profile(const EPSet& w) {
  if (!w.canonical()) {
    throw Error(ErrorCode::kNotCanonical, "residue profile needs a canonical set");
  }
  ResidueProfile p{zlattice::QuotientStructure(w.basis()), {}, {}, {}, false};
  for (const Point& b : w.base()) p.q.push_back(p.quotient.project(b));
  std::sort(p.q.begin(), p.q.end());
  p.q.erase(std::unique(p.q.begin(), p.q.end()), p.q.end());
  for (const Point& s : w.sporadic()) {
    const std::size_t r = p.quotient.project(s);
    if (std::binary_search(p.q.begin(), p.q.end(), r)) {
      p.w0.push_back(s);
    } else {
      p.w1.push_back(s);
    }
  }
  p.is_periodic = w.sporadic().empty();
  return p;
}

finitegrp::GroupSubset q_subset(const ResidueProfile& p) {
  std::vector<finitegrp::Elem> elems;
  for (std::size_t r : p.q) elems.push_back(static_cast<finitegrp::Elem>(r));
  return finitegrp::GroupSubset(residue_group(p.quotient), std::move(elems));
}

finitegrp::GroupSubset w1_subset(const ResidueProfile& p) {
  std::vector<finitegrp::Elem> elems;
  for (const Point& s : p.w1) {
    elems.push_back(static_cast<finitegrp::Elem>(p.quotient.project(s)));
  }
  return finitegrp::GroupSubset(residue_group(p.quotient), std::move(elems));
}

}  // namespace mincomp::epsets
