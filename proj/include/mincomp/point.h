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

// Integer points of Z^d. Coordinates are 64-bit; every arithmetic helper
// here is overflow-checked and throws ErrorCode::kOverflow instead of
// wrapping, so results are always exact.

#ifndef MINCOMP_POINT_H_
#define MINCOMP_POINT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace mincomp {

using Int = std::int64_t;
using Point = std::vector<Int>;
using PointSet = std::set<Point>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// Floor modulus: result in [0, m) for m > 0.
Int floor_mod(Int a, Int m);

Point add(std::span<const Int> a, std::span<const Int> b);
Point sub(std::span<const Int> a, std::span<const Int> b);
Point neg(std::span<const Int> a);
Point scale(std::span<const Int> a, Int k);

// Throws kDimensionMismatch when v does not have `dim` coordinates.
void require_dim(std::span<const Int> v, std::size_t dim);

// "(1,-2,3)"
std::string format_point(std::span<const Int> p);
// "{(0,0), (0,1)}"
std::string format_point_set(const PointSet& s);

// Inclusive integer box lo_i <= x_i <= hi_i.
struct Box {
  Point lo;
  Point hi;

  std::size_t dim() const { return lo.size(); }
  bool contains(std::span<const Int> x) const {
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (x[i] < lo[i] || x[i] > hi[i]) return false;
    }
    return true;
  }
};

// [-r, r]^d.
Box cube(std::size_t d, Int r);

// All points of the box in lexicographic order. kBadParams when lo > hi in
// some coordinate or the dimensions disagree.
std::vector<Point> box_points(const Box& box);

struct PointHash {
  std::size_t operator()(const Point& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (Int x : p) {
      h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace mincomp

#endif  // MINCOMP_POINT_H_
