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

// Slow reference implementations written straight from the definitions.
// Nothing here calls into the optimized modules; groups are plain modulus
// lists, subsets are sets of tuples, and lattice questions go through
// Cramer's rule.

#ifndef MINCOMP_ORACLE_H_
#define MINCOMP_ORACLE_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "mincomp/point.h"

namespace mincomp::oracle {

using Predicate = std::function<bool(const Point&)>;

// Predicate-true points of the box, in lexicographic order.
std::vector<Point> window_points(const Predicate& member, const Box& box);

// Targets t with no a in A such that t - a satisfies `b_member`.
std::vector<Point> window_cover_check(const std::vector<Point>& a,
                                      const Predicate& b_member,
                                      const std::vector<Point>& targets);

// Z/m_1 x ... x Z/m_s.
struct NaiveGroup {
  std::vector<Int> moduli;
};
using Tuple = std::vector<Int>;
using TupleSet = std::set<Tuple>;

std::vector<Tuple> naive_elements(const NaiveGroup& g);  // lexicographic
TupleSet naive_sumset(const NaiveGroup& g, const TupleSet& a,
                      const TupleSet& b);
bool naive_is_complement(const NaiveGroup& g, const TupleSet& w,
                         const TupleSet& c);
bool naive_minimality_check(const NaiveGroup& g, const TupleSet& w,
                            const TupleSet& c);

// Conditions (1) and (2) for the pair (Q1, Q), checked literally.
bool naive_pair_conditions(const NaiveGroup& g, const TupleSet& q1,
                           const TupleSet& q, const TupleSet& n);
// Every nonempty subset in (cardinality, lex) order; kSearchTooLarge above
// `cap` elements.
std::optional<TupleSet> naive_pair_search(const NaiveGroup& g,
                                          const TupleSet& q1,
                                          const TupleSet& q,
                                          std::size_t cap = 16);

// Lattice questions for periods given as columns.
bool naive_in_lattice(const std::vector<Point>& periods, const Point& v);
bool naive_in_cone(const std::vector<Point>& periods, const Point& v);

struct NaiveEPSet {
  std::vector<Point> periods;
  std::vector<Point> sporadic;
  std::vector<Point> base;
};
bool naive_member(const NaiveEPSet& w, const Point& x);

// Independent run of the greedy removal rule. `lifts` are the residue lifts
// in enumeration order, `w1` the sporadic points off the base residues.
struct NaiveGreedy {
  std::set<Point> kept;
  std::set<Point> removed;
};
NaiveGreedy naive_greedy(const NaiveEPSet& w, const std::vector<Point>& lifts,
                         const std::vector<Point>& w1, Int shells);

}  // namespace mincomp::oracle

#endif  // MINCOMP_ORACLE_H_
