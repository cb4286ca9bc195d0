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

#include "seqspace/maps.hpp"

#include <cmath>
#include <limits>

namespace seqspace {

MapSpec MapSpec::identity(ValueSpace domain) {
  MapSpec m;
  m.kind_ = Kind::Identity;
  m.domain_ = std::move(domain);
  return m;
}

MapSpec MapSpec::power(Rational r, ValueSpace domain) {
  if (r.sign() <= 0) throw SeqspaceError("MapSpec::power: exponent must be positive");
  MapSpec m;
  m.kind_ = Kind::Power;
  m.r_ = std::move(r);
  m.domain_ = std::move(domain);
  return m;
}

MapSpec MapSpec::clipped_linear(ValueSpace domain) {
  MapSpec m;
  m.kind_ = Kind::ClippedLinear;
  m.domain_ = std::move(domain);
  return m;
}

MapSpec MapSpec::user_table(std::vector<std::pair<Value, Value>> table, std::string tag,
                            ValueSpace domain) {
  MapSpec m;
  m.kind_ = Kind::UserTable;
  m.table_ = std::move(table);
  m.tag_ = std::move(tag);
  m.domain_ = std::move(domain);
  // Every map kind fixes the origin; tables must list it.
  const Value zero = Value::zero(m.domain_);
  if (!m.apply(zero).is_zero()) throw SeqspaceError("MapSpec: table violates f(0) = 0");
  return m;
}

const Rational& MapSpec::power_exponent() const {
  if (kind_ != Kind::Power) throw SeqspaceError("MapSpec: not a power map");
  return r_;
}

std::string MapSpec::describe() const {
  switch (kind_) {
    case Kind::Identity:
      return "identity";
    case Kind::Power:
      return "power(" + r_.str() + ")";
    case Kind::ClippedLinear:
      return "clipped-linear";
    case Kind::UserTable:
      return "user-table(" + tag_ + ")";
  }
  return "?";
}

namespace {

// sign(t) |t|^(u/v) for rational t: exact when |t|^u is a perfect v-th power,
// deterministic dyadic approximation otherwise.
Scalar power_rational(const Rational& t, const Rational& r) {
  if (t.is_zero()) return Scalar::rational(Rational(0));
  const Rational mag = t.abs();
  const auto u = r.num_long();
  const auto v = r.den_ulong();
  std::optional<Rational> out;
  if (u && v) {
    const Rational raised = mag.pow_int(*u);
    out = raised.root_exact(*v);
  }
  if (!out)
    out = Rational::from_double(std::pow(mag.to_double(), r.to_double()));
  return Scalar::rational(t.sign() < 0 ? -*out : *out);
}

Scalar power_scalar(const Scalar& s, const Rational& r) {
  switch (s.mode()) {
    case ScalarMode::RealRational:
      return power_rational(s.rat(), r);
    case ScalarMode::RealFloat: {
      const double t = s.flt().real();
      if (t == 0.0) return Scalar::real(0.0);
      const double m = std::pow(std::fabs(t), r.to_double());
      return Scalar::real(t < 0 ? -m : m);
    }
    case ScalarMode::ComplexFloat: {
      const std::complex<double> z = s.flt();
      if (z == std::complex<double>(0.0, 0.0)) return Scalar::complex({0.0, 0.0});
      return Scalar::complex(z * std::pow(std::abs(z), r.to_double() - 1.0));
    }
  }
  throw SeqspaceError("power_scalar: bad mode");
}

Scalar clipped_scalar(const Scalar& s) {
  switch (s.mode()) {
    case ScalarMode::RealRational: {
      const Rational t = s.rat();
      const Rational gap = Rational(1) - t.abs();
      if (gap.sign() <= 0) return Scalar::rational(Rational(0));
      return Scalar::rational(t * gap);
    }
    case ScalarMode::RealFloat: {
      const double t = s.flt().real();
      return Scalar::real(t * std::max(0.0, 1.0 - std::fabs(t)));
    }
    case ScalarMode::ComplexFloat: {
      const std::complex<double> z = s.flt();
      return Scalar::complex(z * std::max(0.0, 1.0 - std::abs(z)));
    }
  }
  throw SeqspaceError("clipped_scalar: bad mode");
}

}  // namespace

Scalar MapSpec::apply_scalar(const Scalar& s) const {
  switch (kind_) {
    case Kind::Identity:
      return s;
    case Kind::Power:
      return power_scalar(s, r_);
    case Kind::ClippedLinear:
      return clipped_scalar(s);
    case Kind::UserTable: {
      const Value probe = Value::scalar(s);
      for (const auto& [in, out] : table_)
        if (in == probe) return out.as_scalar();
      throw SeqspaceError("MapSpec::user_table: value not in table");
    }
  }
  throw SeqspaceError("MapSpec::apply_scalar: bad kind");
}

Value MapSpec::apply(const Value& v) const {
  if (kind_ == Kind::Identity) return v;
  if (kind_ == Kind::UserTable) {
    for (const auto& [in, out] : table_)
      if (in == v) return out;
    if (v.is_zero()) return v;  // f(0) = 0 holds for every kind
    throw SeqspaceError("MapSpec::user_table: value not in table");
  }
  if (!v.is_vector()) return Value::scalar(apply_scalar(v.as_scalar()));
  std::vector<Scalar> comps;
  comps.reserve(v.dim());
  for (uint32_t i = 0; i < v.dim(); ++i) comps.push_back(apply_scalar(v.component(i)));
  return Value::vector(std::move(comps));
}

Sequence pushforward(const MapSpec& f, const Sequence& seq) {
  if (f.kind() == MapSpec::Kind::Identity) return seq;

  // Power and clipped maps act componentwise, so they commute with bundling;
  // pushing through the coordinates keeps scalar structure (constant folds,
  // envelopes) visible to the deciders.
  if (f.kind() == MapSpec::Kind::Power || f.kind() == MapSpec::Kind::ClippedLinear) {
    if (auto coords = bundle_coordinates(seq)) {
      std::vector<Sequence> mapped;
      mapped.reserve(coords->size());
      for (const auto& c : *coords) mapped.push_back(pushforward(f, c));
      return vector_bundle(std::move(mapped), *seq.values().vec);
    }
  }

  // Constant sequences fold through f exactly.
  if (const auto c = seq.constant_value()) {
    const Scalar fc = f.apply_scalar(*c);
    if (fc.is_zero()) return zero_sequence(seq.values());
    const Rational rep = fc.mode() == ScalarMode::RealRational
                             ? fc.rat()
                             : Rational::from_double(fc.to_double());
    return powlog_sequence(Rational(0), Rational(0), rep, seq.values().field);
  }
  if (seq.support() == SupportHint::FiniteSupport &&
      seq.support_bound() == std::optional<uint64_t>(0))
    return zero_sequence(seq.values());

  std::optional<PowLogEnvelope> env;
  bool preserves = false;
  if (f.kind() == MapSpec::Kind::Power) {
    preserves = true;  // sign(t)|t|^r vanishes only at t = 0
    if (seq.envelope()) env = envelope_powered(*seq.envelope(), f.power_exponent());
  }
  const MapSpec fcopy = f;
  return map_sequence([fcopy](const Value& v) { return fcopy.apply(v); }, seq,
                      seq.values(), std::move(env), preserves, f.describe());
}

std::string to_string(PropertyVerdict v) {
  switch (v) {
    case PropertyVerdict::ProvenSymbolic:
      return "proven-symbolic";
    case PropertyVerdict::HoldsOnSamples:
      return "holds-on-samples";
    case PropertyVerdict::Refuted:
      return "refuted";
  }
  return "?";
}

std::vector<Rational> default_alpha_grid() {
  std::vector<Rational> g;
  for (int k = -3; k <= 3; ++k) {
    const Rational a = Rational(2).pow_int(k);
    g.push_back(a);
    g.push_back(-a);
  }
  return g;
}

namespace {

// Exact verification of |f(alpha x)| == |alpha|^r |f(x)| componentwise for
// power maps on rational values, via v-th powers: |alpha t|^u == |alpha|^u |t|^u.
bool power_law_exact(const Rational& r, const Rational& alpha, const Value& x) {
  const auto u = r.num_long();
  if (!u) return false;
  const uint32_t d = x.is_vector() ? x.dim() : 1;
  for (uint32_t i = 0; i < d; ++i) {
    const Scalar& comp = x.is_vector() ? x.component(i) : x.as_scalar();
    if (comp.mode() != ScalarMode::RealRational) return false;
    const Rational t = comp.rat();
    const Rational lhs = (alpha * t).abs().pow_int(*u);
    const Rational rhs = alpha.abs().pow_int(*u) * t.abs().pow_int(*u);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

double value_norm_double(const Value& v, const ValueSpace& vs) { return v.norm(vs).approx; }

Scalar scalar_of(const Rational& r, ScalarMode m) {
  if (m == ScalarMode::RealRational) return Scalar::rational(r);
  if (m == ScalarMode::RealFloat) return Scalar::real(r.to_double());
  return Scalar::complex({r.to_double(), 0.0});
}

Rational functional_apply_rational(const std::vector<Rational>& phi, const Value& v) {
  Rational acc(0);
  const uint32_t d = v.is_vector() ? v.dim() : 1;
  if (phi.size() != d) throw SeqspaceError("functional/value dimension mismatch");
  for (uint32_t i = 0; i < d; ++i) {
    const Scalar& comp = v.is_vector() ? v.component(i) : v.as_scalar();
    acc += phi[i] * comp.rat();
  }
  return acc;
}

}  // namespace

MapPropertyReport check_non_contractive(const MapSpec& f, const std::vector<Rational>& alphas,
                                        const std::vector<Value>& xs) {
  if (alphas.empty() || xs.empty())
    throw SeqspaceError("check_non_contractive: empty sample lists");
  for (const auto& a : alphas)
    if (a.is_zero()) throw SeqspaceError("check_non_contractive: alpha must be nonzero");

  MapPropertyReport report;
  report.property = "non-contractive";
  report.map = f.describe();

  if (f.kind() == MapSpec::Kind::Identity || f.kind() == MapSpec::Kind::Power) {
    const Rational r = f.kind() == MapSpec::Kind::Power ? f.power_exponent() : Rational(1);
    report.verdict = PropertyVerdict::ProvenSymbolic;
    report.detail = "K(alpha) = |alpha|^" + r.str() + " (homogeneity)";
    bool exact_ok = true;
    for (const auto& a : alphas)
      for (const auto& x : xs) exact_ok = exact_ok && power_law_exact(r, a, x);
    report.facts.emplace_back("grid_exact_equality", exact_ok ? "true" : "false");
    if (!exact_ok) {
      report.verdict = PropertyVerdict::Refuted;
      report.detail = "homogeneity law failed on the sample grid";
    }
    return report;
  }

  // Sampled evidence for black-box kinds.
  const ValueSpace& vs = f.domain();
  for (const auto& a : alphas) {
    double inf_ratio = std::numeric_limits<double>::infinity();
    for (const auto& x : xs) {
      const Value fx = f.apply(x);
      const Value fax = f.apply(x.scaled(scalar_of(a, vs.field.mode)));
      if (fx.is_zero()) continue;  // the bound is vacuous at f(x) = 0
      if (fax.is_zero()) {
        report.verdict = PropertyVerdict::Refuted;
        report.detail = "f(alpha x) = 0 with f(x) != 0: no positive K(alpha) exists";
        report.witnesses.push_back({a, x, std::nullopt,
                                    "f(x) = " + fx.str() + ", f(" + a.str() + " x) = 0"});
        return report;
      }
      inf_ratio = std::min(inf_ratio,
                           value_norm_double(fax, vs) / value_norm_double(fx, vs));
    }
    report.facts.emplace_back("inf_ratio[alpha=" + a.str() + "]",
                              std::isfinite(inf_ratio) ? std::to_string(inf_ratio) : "n/a");
  }
  report.verdict = PropertyVerdict::HoldsOnSamples;
  report.detail = "per-alpha infimum ratios positive on the sample grid";
  return report;
}

MapPropertyReport check_strongly_non_contractive(
    const MapSpec& f, const std::vector<Rational>& alphas, const std::vector<Value>& xs,
    const std::vector<std::vector<Rational>>& functionals) {
  if (functionals.empty())
    throw SeqspaceError("check_strongly_non_contractive: no functionals");
  MapPropertyReport report;
  report.property = "strongly-non-contractive";
  report.map = f.describe();

  if (f.kind() == MapSpec::Kind::Identity || f.kind() == MapSpec::Kind::Power) {
    const Rational r = f.kind() == MapSpec::Kind::Power ? f.power_exponent() : Rational(1);
    // f(alpha x) = sign(alpha) |alpha|^r f(x) as vectors, so the functional
    // inequality holds with equality |phi(f(alpha x))| = |alpha|^r |phi(f(x))|.
    bool exact_ok = true;
    for (const auto& a : alphas)
      for (const auto& x : xs) exact_ok = exact_ok && power_law_exact(r, a, x);
    report.verdict =
        exact_ok ? PropertyVerdict::ProvenSymbolic : PropertyVerdict::Refuted;
    report.detail = "|phi(f(alpha x))| = |alpha|^" + r.str() +
                    " |phi(f(x))| via componentwise homogeneity";
    report.facts.emplace_back("grid_exact_equality", exact_ok ? "true" : "false");
    return report;
  }

  for (const auto& a : alphas) {
    for (const auto& x : xs) {
      const Value fx = f.apply(x);
      const Value fax = f.apply(x.scaled(scalar_of(a, f.domain().field.mode)));
      for (const auto& phi : functionals) {
        const Rational pfx = functional_apply_rational(phi, fx);
        const Rational pfax = functional_apply_rational(phi, fax);
        if (!pfx.is_zero() && pfax.is_zero()) {
          report.verdict = PropertyVerdict::Refuted;
          report.detail = "phi(f(alpha x)) = 0 with phi(f(x)) != 0";
          report.witnesses.push_back(
              {a, x, phi, "phi(f(x)) = " + pfx.str() + ", phi(f(alpha x)) = 0"});
          return report;
        }
      }
    }
  }
  report.verdict = PropertyVerdict::HoldsOnSamples;
  report.detail = "no functional collapse on the sample grid";
  return report;
}

MapPropertyReport check_compatible(const MapSpec& f, const SpaceSpec& space,
                                   const std::vector<Sequence>& seqs,
                                   const std::vector<Rational>& alphas,
                                   const ProbeOptions& opts) {
  for (const auto& a : alphas)
    if (a.is_zero()) throw SeqspaceError("check_compatible: alpha must be nonzero");
  MapPropertyReport report;
  report.property = "compatible(" + space.describe() + ")";
  report.map = f.describe();

  const bool symbolic_map =
      f.kind() == MapSpec::Kind::Identity || f.kind() == MapSpec::Kind::Power;
  const bool symbolic_space = space.is_lp() || space.kind() == SpaceSpec::Kind::C0;

  if (symbolic_map && symbolic_space) {
    // Pushforward of a power-log envelope has exponents (r a, r b); alpha only
    // scales the constants, so the verdict cannot depend on alpha.
    const Rational r = f.kind() == MapSpec::Kind::Power ? f.power_exponent() : Rational(1);
    report.verdict = PropertyVerdict::ProvenSymbolic;
    report.detail = "pushforward envelope exponents (" + r.str() + "a, " + r.str() +
                    "b) do not depend on alpha";
    for (const auto& seq : seqs) {
      if (!seq.envelope()) continue;
      const auto base = decide_membership_symbolic(space, pushforward(f, seq));
      for (const auto& a : alphas) {
        const Sequence scaled =
            scale_sequence(scalar_of(a, seq.values().field.mode), seq);
        const auto moved = decide_membership_symbolic(space, pushforward(f, scaled));
        if (moved.verdict != base.verdict) {
          report.verdict = PropertyVerdict::Refuted;
          report.detail = "alpha-dependent verdict on envelope input";
          report.witnesses.push_back({a, Value::scalar(scalar_of(a, ScalarMode::RealRational)),
                                      std::nullopt, seq.describe()});
          return report;
        }
      }
      report.facts.emplace_back(seq.describe(), to_string(base.verdict));
    }
    return report;
  }

  // Contrapositive sampling: an Out image that an alpha-scaling moves back In
  // refutes compatibility.
  uint64_t inconclusive = 0;
  for (const auto& seq : seqs) {
    const auto base = decide_membership(space, pushforward(f, seq), opts);
    if (base.verdict != Verdict::Out) {
      if (base.verdict == Verdict::Inconclusive) ++inconclusive;
      continue;
    }
    for (const auto& a : alphas) {
      const Sequence scaled = scale_sequence(scalar_of(a, seq.values().field.mode), seq);
      const auto moved = decide_membership(space, pushforward(f, scaled), opts);
      if (moved.verdict == Verdict::In) {
        report.verdict = PropertyVerdict::Refuted;
        report.detail = "image escaped the space but an alpha-scaling re-entered it";
        report.witnesses.push_back({a, Value::scalar(scalar_of(a, ScalarMode::RealRational)),
                                    std::nullopt,
                                    seq.describe() + ": f(x) " + base.rule + "; f(" +
                                        a.str() + "x) " + moved.rule});
        return report;
      }
      if (moved.verdict == Verdict::Inconclusive) ++inconclusive;
    }
  }
  report.verdict = PropertyVerdict::HoldsOnSamples;
  report.detail = "no contrapositive violation on the sample grid";
  report.facts.emplace_back("inconclusive_probes", std::to_string(inconclusive));
  return report;
}

}  // namespace seqspace
