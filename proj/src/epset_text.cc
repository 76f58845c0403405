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

#include "mincomp/epset_text.h"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "mincomp/errors.h"

namespace mincomp::epsets {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + what, line);
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<Int> parse_ints(std::string_view s, std::size_t line) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (true) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    if (pos == s.size()) break;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    const std::string_view tok = s.substr(pos, end - pos);
    Int v = 0;
    const char* first = tok.data();
    if (!tok.empty() && tok.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail(line, "bad integer '" + std::string(tok) + "'");
    }
    out.push_back(v);
    pos = end;
  }
  return out;
}

// "a b ; c d" with every group holding exactly `dim` integers.
std::vector<Point> parse_points(std::string_view s, std::size_t dim,
                                std::size_t line) {
  std::vector<Point> out;
  if (trim(s).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto semi = s.find(';', start);
    const std::string_view part =
        s.substr(start, semi == std::string_view::npos ? s.npos : semi - start);
    Point p = parse_ints(part, line);
    if (p.size() != dim) {
      fail(line, "expected " + std::to_string(dim) + " coordinates, got " +
                     std::to_string(p.size()));
    }
    out.push_back(std::move(p));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace

EPSet parse_epset(std::string_view text) {
  std::optional<std::size_t> dim;
  std::optional<std::vector<Point>> periods;
  PointSet sporadic, base;
  bool have_base = false, have_sporadic = false;
  std::size_t line_no = 0, last_line = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    last_line = line_no;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) fail(line_no, "expected 'key: value'");
    const std::string_view key = trim(line.substr(0, colon));
    const std::string_view value = line.substr(colon + 1);

    if (key == "dim") {
      if (dim) fail(line_no, "duplicate dim");
      const auto v = parse_ints(value, line_no);
      if (v.size() != 1 || v[0] < 1) fail(line_no, "dim must be one positive integer");
      dim = static_cast<std::size_t>(v[0]);
      continue;
    }
    if (!dim) fail(line_no, "dim must come first");
    if (key == "periods") {
      if (periods) fail(line_no, "duplicate periods");
      auto cols = parse_points(value, *dim, line_no);
      if (cols.size() != *dim) {
        fail(line_no, "expected " + std::to_string(*dim) + " period vectors");
      }
      periods = std::move(cols);
    } else if (key == "sporadic") {
      if (have_sporadic) fail(line_no, "duplicate sporadic");
      have_sporadic = true;
      for (Point& p : parse_points(value, *dim, line_no)) sporadic.insert(p);
    } else if (key == "base") {
      if (have_base) fail(line_no, "duplicate base");
      have_base = true;
      for (Point& p : parse_points(value, *dim, line_no)) base.insert(p);
    } else {
      fail(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!dim) fail(last_line + 1, "missing dim");
  if (!periods) fail(last_line + 1, "missing periods");
  if (!have_base) fail(last_line + 1, "missing base");
  return EPSet(zlattice::PeriodBasis(*periods), std::move(sporadic),
               std::move(base));
}

namespace {

std::string join_points(const std::vector<Point>& pts) {
  std::ostringstream out;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) out << " ;";
    for (Int x : pts[k]) out << ' ' << x;
  }
  return out.str();
}

}  // namespace

std::string format_epset(const EPSet& w) {
  std::string out = "dim: " + std::to_string(w.dim()) + "\n";
  out += "periods:" + join_points(w.basis().columns()) + "\n";
  if (!w.sporadic().empty()) {
    out += "sporadic:" +
           join_points({w.sporadic().begin(), w.sporadic().end()}) + "\n";
  }
  out += "base:" + join_points({w.base().begin(), w.base().end()}) + "\n";
  return out;
}

}  // namespace mincomp::epsets
