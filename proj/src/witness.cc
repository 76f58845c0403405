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

#include "mincomp/witness.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>

#include "mincomp/errors.h"

namespace mincomp::witness {
namespace {

using epsets::EPSet;
using zlattice::QuotientStructure;

EPSet canonical_form(const EPSet& w) {
  return w.canonical() ? w : epsets::canonicalize(w);
}

Int max_abs(const Point& g) {
  Int m = 0;
  for (Int x : g) m = std::max(m, x < 0 ? checked_sub(0, x) : x);
  return m;
}

// Everything the greedy and the verifier need about (W, N).
class Context {
 public:
  Context(const EPSet& canon, const finitegrp::PairCertificate& cert)
      : quotient_(canon.basis()),
        in_n_(quotient_.order(), false),
        cprime_(quotient_.order(), false),
        lift_(quotient_.order()) {
    const epsets::ResidueProfile profile = epsets::residue_profile(canon);
    if (profile.w1.empty()) {
      throw Error(ErrorCode::kInvalidCertificate,
                  "the set has no sporadic points outside base residues");
    }
    const finitegrp::GroupSubset q1 = epsets::w1_subset(profile);
    const finitegrp::GroupSubset q = epsets::q_subset(profile);
    if (!(cert.n.group() == q.group()) ||
        !finitegrp::is_valid_pair_certificate(q1, q, cert)) {
      throw Error(ErrorCode::kInvalidCertificate,
                  "certificate does not satisfy the pair conditions");
    }
    w1_ = profile.w1;
    for (finitegrp::Elem n : cert.n.elements()) {
      in_n_[n] = true;
      residues_.push_back(n);
      lift_[n] = quotient_.reps()[n];
    }
    const finitegrp::GroupSubset nq = finitegrp::sumset(cert.n, q);
    for (std::size_t r = 0; r < quotient_.order(); ++r) {
      cprime_[r] = !nq.contains(static_cast<finitegrp::Elem>(r));
    }
  }

  const QuotientStructure& quotient() const { return quotient_; }
  const zlattice::PeriodBasis& basis() const { return quotient_.basis(); }
  std::size_t dim() const { return quotient_.dim(); }
  bool in_n(std::size_t r) const { return in_n_[r]; }
  bool in_cprime(std::size_t r) const { return cprime_[r]; }
  const Point& lift(std::size_t r) const { return lift_[r]; }
  const std::vector<std::size_t>& residues() const { return residues_; }
  const std::vector<Point>& w1() const { return w1_; }

  // Period coordinates of p relative to the lift of its residue.
  Point gamma(const Point& p, std::size_t r) const {
    return *basis().coords(sub(p, lift_[r]));
  }

 private:
  QuotientStructure quotient_;
  std::vector<bool> in_n_;
  std::vector<bool> cprime_;
  std::vector<Point> lift_;
  std::vector<std::size_t> residues_;
  std::vector<Point> w1_;
};

// Calls f(gamma) for every gamma with max |gamma_i| = s, lexicographically.
template <typename F>
void for_each_in_shell(std::size_t d, Int s, F&& f) {
  Point g(d, -s);
  while (true) {
    if (max_abs(g) == s) f(g);
    std::size_t i = d;
    while (i > 0 && g[i - 1] == s) {
      g[i - 1] = -s;
      --i;
    }
    if (i == 0) break;
    ++g[i - 1];
  }
}

void decide_point(const Context& ctx, WitnessComplement& wit, const Point& c) {
  const QuotientStructure& q = ctx.quotient();
  auto present = [&](const Point& p) {
    return ctx.in_n(q.project(p)) && !wit.removed.count(p);
  };
  for (const Point& w : ctx.w1()) {
    const Point x = add(c, w);
    if (!ctx.in_cprime(q.project(x))) continue;
    bool loses = true;
    for (const Point& w2 : ctx.w1()) {
      const Point p = sub(x, w2);
      if (p != c && present(p)) {
        loses = false;
        break;
      }
    }
    if (loses) {
      wit.kept.insert(c);
      return;
    }
  }
  wit.removed.insert(c);
}

void run_shells(const Context& ctx, WitnessComplement& wit, std::size_t from,
                std::size_t to) {
  for (std::size_t s = from; s <= to; ++s) {
    for_each_in_shell(ctx.dim(), static_cast<Int>(s), [&](const Point& g) {
      const Point offset = ctx.basis().combine(g);
      for (std::size_t r : ctx.residues()) {
        decide_point(ctx, wit, add(ctx.lift(r), offset));
      }
    });
  }
}

// Downward closure of the kept points of one residue inside [-K, K]^d.
class Dominance {
 public:
  Dominance(std::size_t d, Int k) : d_(d), k_(k), stride_(d) {
    std::size_t size = 1;
    for (std::size_t i = d; i-- > 0;) {
      stride_[i] = size;
      size *= static_cast<std::size_t>(2 * k + 1);
    }
    flags_.assign(size, 0);
  }

  void mark(const Point& g) { flags_[index(g)] = 1; }

  void close() {
    const auto side = static_cast<std::size_t>(2 * k_ + 1);
    for (std::size_t idx = 0; idx < flags_.size(); ++idx) {
      if (flags_[idx]) continue;
      for (std::size_t i = 0; i < d_; ++i) {
        if ((idx / stride_[i]) % side != 0 && flags_[idx - stride_[i]]) {
          flags_[idx] = 1;
          break;
        }
      }
    }
  }

  // Some marked point lies componentwise below g.
  bool below(const Point& g) const {
    Point c(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      if (g[i] < -k_) return false;
      c[i] = std::min(g[i], k_);
    }
    return flags_[index(c)];
  }

 private:
  std::size_t index(const Point& g) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d_; ++i) {
      idx += static_cast<std::size_t>(g[i] + k_) * stride_[i];
    }
    return idx;
  }

  std::size_t d_;
  Int k_;
  std::vector<std::size_t> stride_;
  std::vector<char> flags_;
};

// The witness plus lazily extended shells, as seen by the verifier.
class Explorer {
 public:
  Explorer(const Context& ctx, WitnessComplement wit, std::size_t cap)
      : ctx_(ctx),
        wit_(std::move(wit)),
        limit_(wit_.shells_processed + cap) {}

  std::size_t shells() const { return wit_.shells_processed; }
  std::size_t limit() const { return limit_; }

  void grow_to(std::size_t s) {
    if (s <= wit_.shells_processed) return;
    if (s > limit_) {
      throw Error(ErrorCode::kShellCapExceeded,
                  "verification needs shell " + std::to_string(s) +
                      ", beyond the cap of " + std::to_string(limit_));
    }
    run_shells(ctx_, wit_, wit_.shells_processed + 1, s);
    wit_.shells_processed = s;
    dominance_.clear();
  }

  // p is in the complement, growing the decided region when needed.
  bool in_m(const Point& p) {
    const std::size_t r = ctx_.quotient().project(p);
    if (!ctx_.in_n(r)) return false;
    grow_to(static_cast<std::size_t>(max_abs(ctx_.gamma(p, r))));
    return wit_.kept.count(p) > 0;
  }

  // Decided already and kept, without growing.
  std::optional<bool> in_m_if_decided(const Point& p, std::size_t r) const {
    const Point g = ctx_.gamma(p, r);
    if (static_cast<std::size_t>(max_abs(g)) > wit_.shells_processed) {
      return std::nullopt;
    }
    return wit_.kept.count(p) > 0;
  }

  bool kept_below(std::size_t r, const Point& g) {
    if (dominance_.empty()) rebuild();
    return dominance_.at(r).below(g);
  }

 private:
  void rebuild() {
    const auto k = static_cast<Int>(wit_.shells_processed);
    for (std::size_t r : ctx_.residues()) {
      dominance_.emplace(r, Dominance(ctx_.dim(), k));
    }
    for (const Point& m : wit_.kept) {
      const std::size_t r = ctx_.quotient().project(m);
      dominance_.at(r).mark(ctx_.gamma(m, r));
    }
    for (auto& [r, dom] : dominance_) dom.close();
  }

  const Context& ctx_;
  WitnessComplement wit_;
  std::size_t limit_;
  std::map<std::size_t, Dominance> dominance_;
};

bool covered(const EPSet& canon, const Context& ctx, Explorer& ex,
             const Point& x) {
  const QuotientStructure& q = ctx.quotient();
  struct Sporadic {
    Point m;
    std::size_t r;
  };
  struct Cone {
    std::size_t r;
    Point g;
  };
  std::vector<Sporadic> sporadic;
  std::vector<Cone> cone;
  for (const Point& s : canon.sporadic()) {
    Point m = sub(x, s);
    const std::size_t r = q.project(m);
    if (ctx.in_n(r)) sporadic.push_back({std::move(m), r});
  }
  for (const Point& b : canon.base()) {
    const Point y = sub(x, b);
    const std::size_t r = q.project(y);
    if (ctx.in_n(r)) cone.push_back({r, ctx.gamma(y, r)});
  }
  if (sporadic.empty() && cone.empty()) return false;

  while (true) {
    std::size_t needed = 0;
    for (const auto& c : sporadic) {
      if (auto known = ex.in_m_if_decided(c.m, c.r)) {
        if (*known) return true;
      } else {
        needed = std::max(needed,
                          static_cast<std::size_t>(max_abs(ctx.gamma(c.m, c.r))));
      }
    }
    for (const auto& c : cone) {
      if (ex.kept_below(c.r, c.g)) return true;
    }
    if (needed == 0 && cone.empty()) return false;
    if (ex.shells() >= ex.limit()) {
      throw Error(ErrorCode::kShellCapExceeded,
                  "no covering point for " + format_point(x) + " within " +
                      std::to_string(ex.limit()) + " shells");
    }
    std::size_t next = std::max(needed, 2 * ex.shells() + 1);
    ex.grow_to(std::min(next, ex.limit()));
  }
}

}  // namespace

std::size_t shell_index(const QuotientStructure& q, const Point& p) {
  const Point& lift = q.reps()[q.project(p)];
  return static_cast<std::size_t>(max_abs(*q.basis().coords(sub(p, lift))));
}

WitnessComplement build_witness(const EPSet& w,
                                const finitegrp::PairCertificate& cert,
                                long long shells) {
  if (shells < 0) {
    throw Error(ErrorCode::kNegativeShells, "shell count must be >= 0");
  }
  const EPSet canon = canonical_form(w);
  const Context ctx(canon, cert);
  WitnessComplement wit{cert, canon.basis(), 0, {}, {}};
  run_shells(ctx, wit, 0, static_cast<std::size_t>(shells));
  wit.shells_processed = static_cast<std::size_t>(shells);
  return wit;
}

void extend_witness(const EPSet& w, WitnessComplement& wit,
                    std::size_t shells) {
  if (shells <= wit.shells_processed) return;
  const EPSet canon = canonical_form(w);
  const Context ctx(canon, wit.certificate);
  run_shells(ctx, wit, wit.shells_processed + 1, shells);
  wit.shells_processed = shells;
}

WindowReport verify_window(const EPSet& w, const WitnessComplement& wit,
                           const Box& core, const VerifyOptions& options) {
  const EPSet canon = canonical_form(w);
  require_dim(core.lo, canon.dim());
  const Context ctx(canon, wit.certificate);
  Explorer ex(ctx, wit, options.extra_shell_cap);
  const QuotientStructure& q = ctx.quotient();

  WindowReport report;
  const std::vector<Point> points = box_points(core);
  report.core_points = points.size();
  for (const Point& x : points) {
    if (covered(canon, ctx, ex, x)) {
      ++report.covered;
    } else {
      report.coverage_failures.push_back(x);
    }
  }

  for (const Point& m : points) {
    if (!ctx.in_n(q.project(m)) || !ex.in_m(m)) continue;
    ++report.kept_in_core;
    bool witnessed = false;
    for (const Point& w1 : ctx.w1()) {
      const Point x = add(m, w1);
      if (!ctx.in_cprime(q.project(x))) continue;
      bool alone = true;
      for (const Point& w2 : ctx.w1()) {
        if (w2 != w1 && ex.in_m(sub(x, w2))) {
          alone = false;
          break;
        }
      }
      if (alone) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) report.minimality_failures.push_back(m);
  }
  report.shells_used = ex.shells();
  return report;
}

std::string format_witness_dump(const WitnessComplement& wit) {
  std::ostringstream out;
  auto emit = [&](char tag, const PointSet& pts) {
    for (const Point& p : pts) {
      out << tag;
      for (Int x : p) out << ' ' << x;
      out << '\n';
    }
  };
  emit('K', wit.kept);
  emit('R', wit.removed);
  return out.str();
}

std::string format_report_text(const WindowReport& r) {
  std::ostringstream out;
  out << "core points: " << r.core_points << "\n"
      << "covered: " << r.covered << "\n";
  for (const Point& x : r.coverage_failures) {
    out << "uncovered: " << format_point(x) << "\n";
  }
  out << "kept points in core: " << r.kept_in_core << "\n";
  for (const Point& m : r.minimality_failures) {
    out << "no minimality witness: " << format_point(m) << "\n";
  }
  out << "shells used: " << r.shells_used << "\n"
      << "result: " << (r.passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string format_report_machine(const WindowReport& r) {
  std::ostringstream out;
  out << "covered=" << r.covered << " failures=" << r.coverage_failures.size()
      << " minimality_ok=" << (r.minimality_ok() ? "true" : "false") << "\n";
  out << "core_points=" << r.core_points << "\n";
  out << "kept_in_core=" << r.kept_in_core << "\n";
  out << "shells_used=" << r.shells_used << "\n";
  for (const Point& x : r.coverage_failures) {
    out << "uncovered=" << format_point(x) << "\n";
  }
  for (const Point& m : r.minimality_failures) {
    out << "minimality_missing=" << format_point(m) << "\n";
  }
  out << "pass=" << (r.passed() ? "true" : "false") << "\n";
  return out.str();
}

void validate(const BeamSet& m) {
  const std::size_t d = m.basis.dim();
  for (const Point& p : m.finite_part) require_dim(p, d);
  for (const Beam& b : m.beams) {
    require_dim(b.apex, d);
    require_dim(b.direction, d);
    const auto g = m.basis.coords(b.direction);
    if (!g || std::any_of(g->begin(), g->end(), [](Int x) { return x < 1; })) {
      throw Error(ErrorCode::kMalformedBeam,
                  "beam direction " + format_point(b.direction) +
                      " is not strictly inside the cone");
    }
  }
}

bool beam_complement_check(const BeamSet& m) {
  validate(m);
  const QuotientStructure q(m.basis);
  std::vector<bool> hit(q.order(), false);
  for (const Beam& b : m.beams) {
    // The residues apex - t*dir repeat with period dividing the order.
    const std::size_t step = q.negate(q.project(b.direction));
    std::size_t r = q.project(b.apex);
    for (std::size_t t = 0; t < q.order(); ++t) {
      hit[r] = true;
      r = q.add(r, step);
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

BeamSet drop_finite(const BeamSet& m, const PointSet& f) {
  validate(m);
  BeamSet out{m.basis, {}, {}};
  for (const Point& p : m.finite_part) {
    if (!f.count(p)) out.finite_part.insert(p);
  }
  for (const Beam& b : m.beams) {
    // Largest t with apex - t*dir in F.
    std::optional<Int> last;
    std::size_t axis = 0;
    while (b.direction[axis] == 0) ++axis;
    for (const Point& p : f) {
      require_dim(p, m.basis.dim());
      const Int diff = checked_sub(b.apex[axis], p[axis]);
      if (diff % b.direction[axis] != 0) continue;
      const Int t = diff / b.direction[axis];
      if (t < 0 || sub(b.apex, scale(b.direction, t)) != p) continue;
      if (!last || t > *last) last = t;
    }
    if (!last) {
      out.beams.push_back(b);
      continue;
    }
    for (Int t = 0; t < *last; ++t) {
      Point p = sub(b.apex, scale(b.direction, t));
      if (!f.count(p)) out.finite_part.insert(std::move(p));
    }
    out.beams.push_back(
        {sub(b.apex, scale(b.direction, checked_add(*last, 1))), b.direction});
  }
  return out;
}

}  // namespace mincomp::witness
