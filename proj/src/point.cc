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

#include "mincomp/point.h"

#include "mincomp/errors.h"

namespace mincomp {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "integer addition overflow");
  }
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "integer subtraction overflow");
  }
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kOverflow, "integer multiplication overflow");
  }
  return r;
}

Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

void require_dim(std::span<const Int> v, std::size_t dim) {
  if (v.size() != dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(dim) + " coordinates, got " +
                    std::to_string(v.size()));
  }
}

Point add(std::span<const Int> a, std::span<const Int> b) {
  require_dim(b, a.size());
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

Point sub(std::span<const Int> a, std::span<const Int> b) {
  require_dim(b, a.size());
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

Point neg(std::span<const Int> a) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(0, a[i]);
  return r;
}

Point scale(std::span<const Int> a, Int k) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

std::string format_point(std::span<const Int> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::string format_point_set(const PointSet& set) {
  std::string s = "{";
  bool first = true;
  for (const Point& p : set) {
    if (!first) s += ", ";
    first = false;
    s += format_point(p);
  }
  return s + "}";
}

Box cube(std::size_t d, Int r) {
  return Box{Point(d, checked_sub(0, r)), Point(d, r)};
}

std::vector<Point> box_points(const Box& box) {
  const std::size_t d = box.lo.size();
  if (box.hi.size() != d) {
    throw Error(ErrorCode::kBadParams, "box bounds disagree in dimension");
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (box.lo[i] > box.hi[i]) {
      throw Error(ErrorCode::kBadParams, "empty box");
    }
  }
  std::vector<Point> out;
  Point p = box.lo;
  while (true) {
    out.push_back(p);
    std::size_t i = d;
    while (i > 0 && p[i - 1] == box.hi[i - 1]) {
      p[i - 1] = box.lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++p[i - 1];
  }
  return out;
}

}  // namespace mincomp
