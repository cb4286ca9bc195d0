// Copyright 2026 The seqspace authors
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

#include "seqspace/spaces.hpp"

#include <algorithm>
#include <cmath>

namespace seqspace {

std::string KernelWeights::describe() const {
  switch (kind) {
    case Kind::Ones:
      return "ones";
    case Kind::Geometric:
      return "geometric(" + ratio.str() + ")";
    case Kind::Explicit:
      return "explicit[" + std::to_string(values.size()) + "]";
  }
  return "?";
}

SpaceSpec SpaceSpec::lp(Rational p) {
  if (p.sign() <= 0) throw SeqspaceError("SpaceSpec::lp: p must be positive");
  SpaceSpec s;
  s.kind_ = Kind::Lp;
  s.p_ = std::move(p);
  return s;
}
SpaceSpec SpaceSpec::lp_infinity() {
  SpaceSpec s;
  s.kind_ = Kind::Lp;
  s.p_ = std::nullopt;
  return s;
}
SpaceSpec SpaceSpec::c0() {
  SpaceSpec s;
  s.kind_ = Kind::C0;
  return s;
}
SpaceSpec SpaceSpec::c() {
  SpaceSpec s;
  s.kind_ = Kind::C;
  return s;
}
SpaceSpec SpaceSpec::c00() {
  SpaceSpec s;
  s.kind_ = Kind::C00;
  return s;
}
SpaceSpec SpaceSpec::kernel(KernelWeights w) {
  SpaceSpec s;
  s.kind_ = Kind::KernelFunctional;
  s.weights_ = std::move(w);
  return s;
}

const Rational& SpaceSpec::p() const {
  if (kind_ != Kind::Lp || !p_) throw SeqspaceError("SpaceSpec::p: not a finite lp space");
  return *p_;
}

Rational SpaceSpec::quasi_exponent() const {
  if (kind_ == Kind::Lp && p_ && *p_ < Rational(1)) return *p_;
  return Rational(1);
}

bool SpaceSpec::sup_like() const {
  return kind_ == Kind::C0 || kind_ == Kind::C || kind_ == Kind::C00 ||
         (kind_ == Kind::Lp && !p_);
}

std::string SpaceSpec::describe() const {
  switch (kind_) {
    case Kind::Lp:
      return p_ ? "lp(" + p_->str() + ")" : "lp(inf)";
    case Kind::C0:
      return "c0";
    case Kind::C:
      return "c";
    case Kind::C00:
      return "c00";
    case Kind::KernelFunctional:
      return "kernel(" + weights_.describe() + ")";
  }
  return "?";
}

namespace {
// Inclusion rank among the nestable built-ins: finite lp (by p), then c0, then
// l-infinity.
int family_tier(const SpaceSpec& s) {
  if (s.kind() == SpaceSpec::Kind::C0) return 1;
  if (s.infinite_p()) return 2;
  if (s.is_lp()) return 0;
  throw SeqspaceError("NestedFamily: members must be lp or c0 built-ins");
}
}  // namespace

NestedFamily::NestedFamily(std::vector<SpaceSpec> members) : members_(std::move(members)) {
  if (members_.empty()) throw SeqspaceError("NestedFamily: empty family");
  for (const auto& m : members_) family_tier(m);  // validates member kinds
  std::stable_sort(members_.begin(), members_.end(),
                   [](const SpaceSpec& x, const SpaceSpec& y) {
                     const int tx = family_tier(x), ty = family_tier(y);
                     if (tx != ty) return tx < ty;
                     if (tx == 0) return x.p() < y.p();
                     return false;
                   });
  for (size_t i = 1; i < members_.size(); ++i)
    if (members_[i - 1].describe() == members_[i].describe())
      throw SeqspaceError("NestedFamily: duplicate member " + members_[i].describe());
}

std::string NestedFamily::describe() const {
  std::string s = "{";
  for (size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ", ";
    s += members_[i].describe();
  }
  return s + "}";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::In:
      return "In";
    case Verdict::Out:
      return "Out";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::string to_string(CertMethod m) {
  switch (m) {
    case CertMethod::SymbolicPowLog:
      return "symbolic-powlog";
    case CertMethod::PartialNormProbe:
      return "partial-norm-probe";
    case CertMethod::FunctionalEvaluation:
      return "functional-evaluation";
  }
  return "?";
}

std::optional<Rational> PartialNorm::exact_norm() const {
  if (sup_like) return exact_max;
  if (!exact_sum || !p) return std::nullopt;
  if (*p == Rational(1)) return exact_sum;
  // (sum)^(1/p) exact only for perfect roots with integer p.
  if (const auto pi = p->as_long(); pi && *pi > 0)
    return exact_sum->root_exact(static_cast<unsigned long>(*pi));
  return std::nullopt;
}

bool PartialNorm::exceeds(const Rational& t) const {
  if (sup_like) {
    if (exact_max) return *exact_max > t;
    return value > t.to_double();
  }
  if (exact_sum && p) {
    if (t.sign() <= 0) return exact_sum->sign() > 0;
    // norm > t  <=>  sum > t^p  <=>  sum^v > t^u for p = u/v
    const auto u = p->num_long();
    const auto v = p->den_ulong();
    if (u && v)
      return compare_pow(*exact_sum, t, *u, *v) == std::strong_ordering::greater;
  }
  return value > t.to_double();
}

namespace {

struct NormAccumulator {
  const SpaceSpec& space;
  const ValueSpace& vs;
  bool sup_like;
  std::optional<Rational> p;       // finite lp exponent
  std::optional<long> p_int;       // integer exponent for exact sums
  bool exact;                      // exact accumulation possible
  Rational sum_exact{0};
  Rational max_exact{0};
  double sum_d = 0.0;
  double max_d = 0.0;

  NormAccumulator(const SpaceSpec& sp, const ValueSpace& v, bool exact_enabled = true)
      : space(sp), vs(v), sup_like(sp.sup_like()) {
    if (!sup_like) {
      p = sp.kind() == SpaceSpec::Kind::KernelFunctional ? Rational(1) : sp.p();
      p_int = p->as_long();
    }
    exact = exact_enabled && vs.field.exact();
  }

  void add(const Value& val) {
    const Magnitude m = val.norm(vs);
    if (sup_like) {
      max_d = std::max(max_d, m.approx);
      if (exact && m.exact) {
        if (*m.exact > max_exact) max_exact = *m.exact;
      } else {
        exact = false;
      }
      return;
    }
    sum_d += std::pow(m.approx, p->to_double());
    if (exact && m.exact && p_int && *p_int > 0)
      sum_exact += m.exact->pow_int(*p_int);
    else
      exact = false;
  }

  PartialNorm finish() const {
    PartialNorm r;
    r.sup_like = sup_like;
    if (sup_like) {
      r.value = max_d;
      if (exact) {
        r.exact_max = max_exact;
        r.value = max_exact.to_double();
      }
      return r;
    }
    r.p = p;
    if (exact) {
      r.exact_sum = sum_exact;
      r.value = *p == Rational(1) ? sum_exact.to_double()
                                  : std::pow(sum_exact.to_double(), 1.0 / p->to_double());
    } else {
      r.value = *p == Rational(1) ? sum_d : std::pow(sum_d, 1.0 / p->to_double());
    }
    return r;
  }
};

}  // namespace

PartialNorm partial_norm(const SpaceSpec& space, const Sequence& seq, uint64_t n) {
  if (n < 1) throw SeqspaceError("partial_norm: n >= 1 required");
  NormAccumulator acc(space, seq.values());
  for (uint64_t j = 1; j <= n; ++j) acc.add(seq.eval(j));
  return acc.finish();
}

std::vector<std::pair<uint64_t, double>> partial_norm_trace(const SpaceSpec& space,
                                                            const Sequence& seq,
                                                            uint64_t n) {
  // Traces are reporting artifacts; accumulate in double.
  NormAccumulator acc(space, seq.values(), /*exact_enabled=*/false);
  std::vector<std::pair<uint64_t, double>> out;
  out.reserve(n);
  for (uint64_t j = 1; j <= n; ++j) {
    acc.add(seq.eval(j));
    out.emplace_back(j, acc.finish().value);
  }
  return out;
}

// ---- symbolic decisions -------------------------------------------------------

namespace {

Verdict envelope_verdict(const SpaceSpec& space, const PowLogEnvelope& e,
                         std::string* rule) {
  const Rational one(1);
  const Rational zero(0);
  if (space.kind() == SpaceSpec::Kind::C0) {
    const bool in = e.a > zero || (e.a == zero && e.b > zero);
    if (rule) *rule = "c0: in iff a > 0 or (a = 0 and b > 0); a=" + e.a.str() +
                      ", b=" + e.b.str();
    return in ? Verdict::In : Verdict::Out;
  }
  if (space.infinite_p()) {
    const bool in = e.a > zero || (e.a == zero && e.b >= zero);
    if (rule) *rule = "lp(inf): bounded iff a > 0 or (a = 0 and b >= 0); a=" + e.a.str() +
                      ", b=" + e.b.str();
    return in ? Verdict::In : Verdict::Out;
  }
  const Rational qa = space.p() * e.a;
  const Rational qb = space.p() * e.b;
  const bool in = qa > one || (qa == one && qb > one);
  if (rule) *rule = "sum k^-qa log^-qb converges iff qa > 1 or (qa = 1 and qb > 1); qa=" +
                    qa.str() + ", qb=" + qb.str();
  return in ? Verdict::In : Verdict::Out;
}

}  // namespace

MembershipCertificate decide_membership_symbolic(const SpaceSpec& space,
                                                 const Sequence& seq) {
  if (!(space.is_lp() || space.kind() == SpaceSpec::Kind::C0))
    throw UnsupportedSpace("decide_membership_symbolic: no symbolic rule for " +
                           space.describe());
  const auto& env = seq.envelope();
  if (!env)
    throw UnsupportedSpace("decide_membership_symbolic: sequence carries no envelope");
  MembershipCertificate cert;
  cert.method = CertMethod::SymbolicPowLog;
  cert.space = space.describe();
  cert.sequence = seq.describe();
  cert.verdict = envelope_verdict(space, *env, &cert.rule);
  cert.facts.emplace_back("a", env->a.str());
  cert.facts.emplace_back("b", env->b.str());
  cert.facts.emplace_back("lo", env->lo.str());
  cert.facts.emplace_back("hi", env->hi.str());
  if (space.is_lp() && !space.infinite_p()) {
    cert.facts.emplace_back("qa", (space.p() * env->a).str());
    cert.facts.emplace_back("qb", (space.p() * env->b).str());
  }
  return cert;
}

// ---- numeric probes -----------------------------------------------------------

namespace {

bool trace_checkpoint(uint64_t n) { return (n & (n - 1)) == 0; }  // powers of two

MembershipCertificate probe_norm_growth(const SpaceSpec& space, const Sequence& seq,
                                        const ProbeOptions& opts) {
  MembershipCertificate cert;
  cert.method = CertMethod::PartialNormProbe;
  cert.space = space.describe();
  cert.sequence = seq.describe();
  // Probes are threshold-based evidence, not proof; double accumulation.
  NormAccumulator acc(space, seq.values(), /*exact_enabled=*/false);
  for (uint64_t j = 1; j <= opts.budget; ++j) {
    acc.add(seq.eval(j));
    const double v = acc.finish().value;
    if (trace_checkpoint(j) || j == opts.budget) cert.trace.emplace_back(j, v);
    if (v > opts.threshold) {
      if (cert.trace.empty() || cert.trace.back().first != j) cert.trace.emplace_back(j, v);
      cert.verdict = Verdict::Out;
      cert.rule = "partial norm crossed threshold " + std::to_string(opts.threshold) +
                  " at n = " + std::to_string(j);
      cert.facts.emplace_back("crossed_at", std::to_string(j));
      return cert;
    }
  }
  cert.verdict = Verdict::Inconclusive;
  cert.rule = "partial norm stayed below threshold within budget (probing cannot certify In)";
  cert.facts.emplace_back("budget", std::to_string(opts.budget));
  return cert;
}

Rational weight_at(const KernelWeights& w, uint64_t j) {
  switch (w.kind) {
    case KernelWeights::Kind::Ones:
      return Rational(1);
    case KernelWeights::Kind::Geometric:
      return w.ratio.pow_int(static_cast<long>(j - 1));
    case KernelWeights::Kind::Explicit:
      return j <= w.values.size() ? w.values[j - 1] : Rational(0);
  }
  throw SeqspaceError("kernel weights: bad kind");
}

MembershipCertificate probe_kernel(const SpaceSpec& space, const Sequence& seq,
                                   const ProbeOptions& opts) {
  MembershipCertificate cert;
  cert.space = space.describe();
  cert.sequence = seq.describe();
  const auto& w = space.weights();

  // Exact route: unit weights and exact series structure.
  if (w.kind == KernelWeights::Kind::Ones) {
    if (const auto sum = exact_series_sum(seq)) {
      const auto l1_bound = exact_abs_sum_bound(seq);
      cert.method = CertMethod::FunctionalEvaluation;
      cert.exact_value = *sum;
      cert.facts.emplace_back("functional_sum", sum->str());
      if (l1_bound) cert.facts.emplace_back("l1_bound", l1_bound->str());
      if (!sum->is_zero()) {
        cert.verdict = Verdict::Out;
        cert.rule = "exact functional sum " + sum->str() + " != 0";
      } else {
        cert.verdict = Verdict::In;
        cert.rule = "exact functional sum 0 and absolutely summable (tail bound " +
                    (l1_bound ? l1_bound->str() : std::string("-")) + ")";
      }
      return cert;
    }
  }

  // Finite support: the functional sum is a finite exact sum in rational mode.
  if (seq.support() == SupportHint::FiniteSupport && seq.support_bound() &&
      seq.values().field.exact() && !seq.values().is_vector()) {
    Rational sum(0);
    for (uint64_t j = 1; j <= *seq.support_bound(); ++j)
      sum += weight_at(w, j) * seq.eval(j).as_scalar().rat();
    cert.method = CertMethod::FunctionalEvaluation;
    cert.exact_value = sum;
    cert.verdict = sum.is_zero() ? Verdict::In : Verdict::Out;
    cert.rule = "finite support: functional sum = " + sum.str();
    return cert;
  }

  // Evidence route: partial functional sums, with a tail bound when available.
  cert.method = CertMethod::PartialNormProbe;
  double s = 0.0;
  for (uint64_t j = 1; j <= opts.budget; ++j) {
    const Value v = seq.eval(j);
    const double x = v.as_scalar().mode() == ScalarMode::RealRational
                         ? v.as_scalar().rat().to_double()
                         : v.as_scalar().to_double();
    s += weight_at(w, j).to_double() * x;
    if (trace_checkpoint(j) || j == opts.budget) cert.trace.emplace_back(j, s);
  }
  // Remaining-tail bound from the declared series structure, if any.
  std::optional<double> tail_bound;
  if (const auto bound = exact_abs_sum_bound(seq)) {
    double consumed = 0.0;
    for (uint64_t j = 1; j <= std::min<uint64_t>(opts.budget, 4096); ++j)
      consumed += std::fabs(seq.eval(j).as_scalar().to_double());
    tail_bound = std::max(0.0, bound->to_double() - consumed);
  }
  if (tail_bound && std::fabs(s) > *tail_bound + opts.tolerance) {
    cert.verdict = Verdict::Out;
    cert.rule = "partial functional sums stabilized away from 0 beyond the tail bound";
    cert.facts.emplace_back("partial_sum", std::to_string(s));
    cert.facts.emplace_back("tail_bound", std::to_string(*tail_bound));
  } else if (tail_bound && std::fabs(s) + *tail_bound < opts.tolerance) {
    cert.verdict = Verdict::In;
    cert.rule = "tail bound forces the functional limit below tolerance";
    cert.facts.emplace_back("bound", std::to_string(std::fabs(s) + *tail_bound));
  } else {
    cert.verdict = Verdict::Inconclusive;
    cert.rule = "functional sums inconclusive at budget";
  }
  return cert;
}

}  // namespace

MembershipCertificate probe_membership_numeric(const SpaceSpec& space, const Sequence& seq,
                                               const ProbeOptions& opts) {
  if (opts.budget < 1) throw SeqspaceError("probe_membership_numeric: budget >= 1");
  if (space.kind() == SpaceSpec::Kind::KernelFunctional)
    return probe_kernel(space, seq, opts);
  return probe_norm_growth(space, seq, opts);
}

MembershipCertificate decide_membership(const SpaceSpec& space, const Sequence& seq,
                                        const ProbeOptions& opts) {
  MembershipCertificate cert;
  cert.space = space.describe();
  cert.sequence = seq.describe();

  // Finite support settles every built-in except the kernel functional.
  if (seq.support() == SupportHint::FiniteSupport) {
    if (space.kind() != SpaceSpec::Kind::KernelFunctional) {
      cert.method = CertMethod::FunctionalEvaluation;
      cert.verdict = Verdict::In;
      cert.rule = "finite support";
      return cert;
    }
    return probe_membership_numeric(space, seq, opts);
  }

  if (space.kind() == SpaceSpec::Kind::C00) {
    // Envelope with positive floor means no zero coordinate at all.
    if (seq.envelope() && seq.envelope()->lo.sign() > 0) {
      cert.method = CertMethod::FunctionalEvaluation;
      cert.verdict = Verdict::Out;
      cert.rule = "envelope floor > 0: infinitely many nonzero coordinates";
      return cert;
    }
    if (seq.support() == SupportHint::Infinite) {
      cert.method = CertMethod::FunctionalEvaluation;
      cert.verdict = Verdict::Out;
      cert.rule = "declared infinite support";
      return cert;
    }
    cert.verdict = Verdict::Inconclusive;
    cert.rule = "c00 membership undecidable for black-box sequences";
    return cert;
  }

  if ((space.is_lp() || space.kind() == SpaceSpec::Kind::C0) && seq.envelope())
    return decide_membership_symbolic(space, seq);

  if (space.kind() == SpaceSpec::Kind::C) {
    if (seq.constant_value()) {
      cert.method = CertMethod::FunctionalEvaluation;
      cert.verdict = Verdict::In;
      cert.rule = "constant sequence";
      return cert;
    }
    if (const auto& t = seq.exact_tail(); t && t->ratio.abs() < Rational(1)) {
      cert.method = CertMethod::FunctionalEvaluation;
      cert.verdict = Verdict::In;
      cert.rule = "geometric tail: converges to 0";
      return cert;
    }
    if (seq.envelope()) {
      // Decaying to 0 implies convergence; an unbounded floor refutes it.
      const auto& e = *seq.envelope();
      const Rational zero(0);
      if (e.a > zero || (e.a == zero && e.b > zero)) {
        cert.method = CertMethod::SymbolicPowLog;
        cert.verdict = Verdict::In;
        cert.rule = "envelope decays to 0";
        return cert;
      }
      if (e.a < zero || (e.a == zero && e.b < zero)) {
        cert.method = CertMethod::SymbolicPowLog;
        cert.verdict = Verdict::Out;
        cert.rule = "envelope floor unbounded";
        return cert;
      }
    }
    return probe_membership_numeric(space, seq, opts);
  }

  // Geometric-tail sequences are absolutely summable: in every lp and c0.
  if (space.is_lp() || space.kind() == SpaceSpec::Kind::C0) {
    if (const auto& t = seq.exact_tail(); t && t->ratio.abs() < Rational(1)) {
      cert.method = CertMethod::FunctionalEvaluation;
      cert.verdict = Verdict::In;
      cert.rule = "geometric tail: absolutely summable, in every lp and c0";
      return cert;
    }
  }

  return probe_membership_numeric(space, seq, opts);
}

// ---- axiom checks ---------------------------------------------------------------

namespace {

// Positions of the nonzero coordinates of x within [1, n].
std::vector<uint64_t> nonzero_positions(const Sequence& x, uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t j = 1; j <= n; ++j)
    if (!x.eval(j).is_zero()) out.push_back(j);
  return out;
}

bool magnitude_le_norm(const Magnitude& m, const PartialNorm& pn) {
  if (pn.sup_like) {
    if (pn.exact_max && m.exact) return *m.exact <= *pn.exact_max;
    return m.approx <= pn.value * (1.0 + 1e-12);
  }
  // ||x_j|| <= (sum ||x_k||^p)^(1/p)  <=>  ||x_j||^u <= sum^v  for p = u/v.
  if (pn.exact_sum && m.exact && pn.p) {
    const auto u = pn.p->num_long();
    const auto v = pn.p->den_ulong();
    if (u && *u > 0 && v)
      return m.exact->pow_int(*u) <= pn.exact_sum->pow_int(static_cast<long>(*v));
  }
  return m.approx <= pn.value * (1.0 + 1e-12);
}

}  // namespace

InvariantAxiomReport check_invariant_axioms(const SpaceSpec& space,
                                            const std::vector<Sequence>& samples,
                                            uint64_t n, const ProbeOptions& opts) {
  if (samples.empty()) throw SeqspaceError("check_invariant_axioms: no samples");
  InvariantAxiomReport report;
  report.passed = true;
  const bool builtin = space.is_lp() || space.kind() == SpaceSpec::Kind::C0 ||
                       space.kind() == SpaceSpec::Kind::C ||
                       space.kind() == SpaceSpec::Kind::KernelFunctional;
  report.builtin_K_is_one = builtin;

  for (const auto& x : samples) {
    InvariantAxiomReport::Sample s;
    s.sequence = x.describe();

    const PartialNorm norm_x = partial_norm(space, x, n);
    // (b2): every coordinate norm is dominated by the truncated sequence norm.
    s.b2_holds = true;
    for (uint64_t j = 1; j <= n; ++j)
      if (!magnitude_le_norm(x.eval(j).norm(x.values()), norm_x)) {
        s.b2_holds = false;
        break;
      }

    // (b1): x and its zero-free version agree in membership where decidable,
    // and the truncated norms match at the matched nonzero count. The axiom
    // only constrains x with x0 != 0, so finitely supported samples are
    // recorded but not compared.
    Sequence x0 = zero_free_version(x);
    s.x_verdict = decide_membership(space, x, opts).verdict;
    s.x0_verdict = decide_membership(space, x0, opts).verdict;
    const bool x0_vanishes = x.support() == SupportHint::FiniteSupport;
    if (!x0_vanishes && s.x_verdict != Verdict::Inconclusive &&
        s.x0_verdict != Verdict::Inconclusive)
      s.verdicts_agree = s.x_verdict == s.x0_verdict;

    const auto nz = nonzero_positions(x, n);
    if (!nz.empty() && !x0_vanishes) {
      const PartialNorm matched_x0 = partial_norm(space, x0, nz.size());
      if (norm_x.exact_sum && matched_x0.exact_sum)
        s.matched_norm_equal = *norm_x.exact_sum == *matched_x0.exact_sum;
      else if (norm_x.exact_max && matched_x0.exact_max)
        s.matched_norm_equal = *norm_x.exact_max == *matched_x0.exact_max;
      else
        s.matched_norm_equal =
            std::fabs(norm_x.value - matched_x0.value) <= 1e-9 * (1.0 + matched_x0.value);
      s.ratio = matched_x0.value > 0 ? norm_x.value / matched_x0.value : 1.0;
    } else {
      s.matched_norm_equal = true;
    }

    report.K_estimate = std::max(report.K_estimate, s.ratio);
    report.passed = report.passed && s.b2_holds && s.verdicts_agree && s.matched_norm_equal;
    report.samples.push_back(std::move(s));
  }
  if (builtin && report.passed && report.K_estimate > 1.0 + 1e-12) {
    report.passed = false;
    report.notes = "built-in space reported K > 1";
  }
  return report;
}

StrongInvarianceReport check_strongly_invariant(const SpaceSpec& space,
                                                const std::vector<Sequence>& samples,
                                                const std::vector<IndexSet>& patterns,
                                                uint64_t n, const ProbeOptions& opts_in) {
  for (const auto& pat : patterns)
    if (!pat.infinite())
      throw SeqspaceError("check_strongly_invariant: patterns must be infinite");
  ProbeOptions opts = opts_in;
  opts.truncation = n;
  StrongInvarianceReport report;

  for (const auto& x : samples) {
    const auto x_cert = decide_membership(space, x, opts);
    if (x_cert.verdict != Verdict::In) continue;  // closure only constrains members
    for (const auto& pat : patterns) {
      ++report.checked_pairs;
      Sequence sub = restrict_to(x, pat);
      const auto sub_cert = decide_membership(space, sub, opts);
      if (sub_cert.verdict == Verdict::Out) {
        StrongInvarianceReport::Violation v;
        v.sample = x.describe();
        v.pattern = pat.describe();
        v.reason = "member sequence has a subsequence outside the space: " + sub_cert.rule;
        v.functional_value = sub_cert.exact_value;
        report.violations.push_back(std::move(v));
      }
    }
  }

  // c00 containment on finitely supported probes.
  const ScalarField field{};  // rational probes
  std::vector<Sequence> probes;
  probes.push_back(unit_coordinate_sequence(1, field));
  probes.push_back(unit_coordinate_sequence(3, field));
  probes.push_back(explicit_sequence(
      {Value::scalar(Scalar::rational(Rational(1))),
       Value::scalar(Scalar::rational(Rational(-2))),
       Value::scalar(Scalar::rational(Rational(1, 3)))},
      ValueSpace{field, std::nullopt}));
  for (const auto& probe : probes) {
    const auto cert = decide_membership(space, probe, opts);
    if (cert.verdict == Verdict::Out) {
      report.c00_contained = false;
      StrongInvarianceReport::Violation v;
      v.sample = probe.describe();
      v.reason = "finitely supported probe not a member: " + cert.rule;
      v.functional_value = cert.exact_value;
      report.violations.push_back(std::move(v));
    }
  }

  report.passed = report.violations.empty() && report.c00_contained;
  return report;
}

}  // namespace seqspace
