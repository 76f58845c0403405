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

#include "mincomp/oracle.h"

#include <algorithm>

#include "mincomp/errors.h"

namespace mincomp::oracle {
namespace {

using Wide = __int128;
using WideMatrix = std::vector<std::vector<Wide>>;

Wide laplace_det(const WideMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Wide det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    WideMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) minor[i - 1].push_back(m[i][k]);
      }
    }
    const Wide term = m[0][j] * laplace_det(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

// Solution of sum gamma_j periods[j] = v when it is integral.
std::optional<std::vector<Wide>> cramer(const std::vector<Point>& periods,
                                        const Point& v) {
  const std::size_t d = periods.size();
  WideMatrix m(d, std::vector<Wide>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = periods[j][i];
  }
  const Wide det = laplace_det(m);
  std::vector<Wide> gamma(d);
  for (std::size_t j = 0; j < d; ++j) {
    WideMatrix mj = m;
    for (std::size_t i = 0; i < d; ++i) mj[i][j] = v[i];
    const Wide num = laplace_det(mj);
    if (num % det != 0) return std::nullopt;
    gamma[j] = num / det;
  }
  return gamma;
}

Point minus(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point plus(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Tuple group_add(const NaiveGroup& g, const Tuple& a, const Tuple& b) {
  Tuple r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = (a[i] + b[i]) % g.moduli[i];
  }
  return r;
}

}  // namespace

std::vector<Point> window_points(const Predicate& member, const Box& box) {
  std::vector<Point> out;
  for (const Point& p : box_points(box)) {
    if (member(p)) out.push_back(p);
  }
  return out;
}

std::vector<Point> window_cover_check(const std::vector<Point>& a,
                                      const Predicate& b_member,
                                      const std::vector<Point>& targets) {
  std::vector<Point> uncovered;
  for (const Point& t : targets) {
    bool hit = false;
    for (const Point& x : a) {
      if (b_member(minus(t, x))) {
        hit = true;
        break;
      }
    }
    if (!hit) uncovered.push_back(t);
  }
  return uncovered;
}

std::vector<Tuple> naive_elements(const NaiveGroup& g) {
  std::vector<Tuple> out = {Tuple{}};
  for (Int m : g.moduli) {
    std::vector<Tuple> next;
    for (const Tuple& t : out) {
      for (Int x = 0; x < m; ++x) {
        Tuple u = t;
        u.push_back(x);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

TupleSet naive_sumset(const NaiveGroup& g, const TupleSet& a,
                      const TupleSet& b) {
  TupleSet out;
  for (const Tuple& x : a) {
    for (const Tuple& y : b) out.insert(group_add(g, x, y));
  }
  return out;
}

bool naive_is_complement(const NaiveGroup& g, const TupleSet& w,
                         const TupleSet& c) {
  return naive_sumset(g, w, c).size() == naive_elements(g).size();
}

bool naive_minimality_check(const NaiveGroup& g, const TupleSet& w,
                            const TupleSet& c) {
  if (!naive_is_complement(g, w, c)) return false;
  for (const Tuple& x : c) {
    TupleSet smaller = c;
    smaller.erase(x);
    if (naive_is_complement(g, w, smaller)) return false;
  }
  return true;
}

bool naive_pair_conditions(const NaiveGroup& g, const TupleSet& q1,
                           const TupleSet& q, const TupleSet& n) {
  if (n.empty()) return false;
  TupleSet s = q;
  s.insert(q1.begin(), q1.end());
  if (!naive_is_complement(g, s, n)) return false;
  for (const Tuple& x : n) {
    TupleSet others = n;
    others.erase(x);
    const TupleSet rest = naive_sumset(g, others, s);
    bool found = false;
    for (const Tuple& y : q1) {
      if (!rest.count(group_add(g, x, y))) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::optional<TupleSet> naive_pair_search(const NaiveGroup& g,
                                          const TupleSet& q1,
                                          const TupleSet& q,
                                          std::size_t cap) {
  const std::vector<Tuple> elems = naive_elements(g);
  if (elems.size() > cap) {
    throw Error(ErrorCode::kSearchTooLarge, "naive search above its cap");
  }
  const std::size_t n = elems.size();
  for (std::size_t k = 1; k <= n; ++k) {
    // Lexicographic k-combinations of positions.
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      TupleSet cand;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) cand.insert(elems[i]);
      }
      if (naive_pair_conditions(g, q1, q, cand)) return cand;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

bool naive_in_lattice(const std::vector<Point>& periods, const Point& v) {
  return cramer(periods, v).has_value();
}

bool naive_in_cone(const std::vector<Point>& periods, const Point& v) {
  const auto gamma = cramer(periods, v);
  if (!gamma) return false;
  return std::all_of(gamma->begin(), gamma->end(),
                     [](Wide x) { return x >= 0; });
}

bool naive_member(const NaiveEPSet& w, const Point& x) {
  if (std::find(w.sporadic.begin(), w.sporadic.end(), x) != w.sporadic.end()) {
    return true;
  }
  for (const Point& b : w.base) {
    if (naive_in_cone(w.periods, minus(x, b))) return true;
  }
  return false;
}

NaiveGreedy naive_greedy(const NaiveEPSet& w, const std::vector<Point>& lifts,
                         const std::vector<Point>& w1, Int shells) {
  const std::size_t d = w.periods.size();
  auto congruent_to_lift = [&](const Point& p) {
    for (const Point& l : lifts) {
      if (naive_in_lattice(w.periods, minus(p, l))) return true;
    }
    return false;
  };
  // Residues avoiding every lift + base point.
  auto in_cprime = [&](const Point& x) {
    for (const Point& l : lifts) {
      for (const Point& b : w.base) {
        if (naive_in_lattice(w.periods, minus(x, plus(l, b)))) return false;
      }
    }
    return true;
  };

  NaiveGreedy out;
  for (Int s = 0; s <= shells; ++s) {
    const Box box{Point(d, -s), Point(d, s)};
    for (const Point& g : box_points(box)) {
      Int norm = 0;
      for (Int x : g) norm = std::max(norm, x < 0 ? -x : x);
      if (norm != s) continue;
      Point offset(d, 0);
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) offset[i] += g[j] * w.periods[j][i];
      }
      for (const Point& l : lifts) {
        const Point c = plus(l, offset);
        bool keep = false;
        for (const Point& a : w1) {
          const Point x = plus(c, a);
          if (!in_cprime(x)) continue;
          // (x - W1) meets the current set only in c.
          bool only_c = true;
          for (const Point& b : w1) {
            const Point p = minus(x, b);
            if (p == c) continue;
            if (congruent_to_lift(p) && !out.removed.count(p)) {
              only_c = false;
              break;
            }
          }
          if (only_c) {
            keep = true;
            break;
          }
        }
        (keep ? out.kept : out.removed).insert(c);
      }
    }
  }
  return out;
}

}  // namespace mincomp::oracle
