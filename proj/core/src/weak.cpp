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

#include "seqspace/weak.hpp"

#include <cmath>
#include <random>

namespace seqspace {

namespace {

std::string functional_str(const std::vector<Rational>& phi) {
  std::string s = "(";
  for (size_t i = 0; i < phi.size(); ++i) {
    if (i) s += ",";
    s += phi[i].str();
  }
  return s + ")";
}

// Dual norm of phi for the primal norm of y; exact for sup and 1 norms.
std::optional<Rational> dual_norm_exact(const VectorSpaceSpec& y,
                                        const std::vector<Rational>& phi) {
  if (y.sup_norm()) {  // dual of sup is the 1-norm
    Rational s(0);
    for (const auto& c : phi) s += c.abs();
    return s;
  }
  if (*y.p == Rational(1)) {  // dual of the 1-norm is the sup norm
    Rational m(0);
    for (const auto& c : phi) m = std::max(m, c.abs());
    return m;
  }
  return std::nullopt;
}

}  // namespace

FunctionalFamily FunctionalFamily::for_space(const VectorSpaceSpec& y,
                                             uint32_t random_count, uint64_t seed) {
  FunctionalFamily fam;
  fam.space = y;
  fam.seed = seed;
  const uint32_t d = y.dim;

  if (y.sup_norm()) {
    // Dual ball is the 1-norm ball; extreme points are the signed axes.
    for (uint32_t i = 0; i < d; ++i) {
      std::vector<Rational> plus(d, Rational(0)), minus(d, Rational(0));
      plus[i] = Rational(1);
      minus[i] = Rational(-1);
      fam.extreme.push_back(std::move(plus));
      fam.extreme.push_back(std::move(minus));
    }
    fam.extreme_exhaustive = true;
  } else if (*y.p == Rational(1)) {
    // Dual ball is the sup ball; extreme points are the 2^d sign vectors.
    if (d > 16) throw SeqspaceError("FunctionalFamily: 2^d sign vectors too large");
    for (uint32_t mask = 0; mask < (1u << d); ++mask) {
      std::vector<Rational> v(d);
      for (uint32_t i = 0; i < d; ++i) v[i] = Rational((mask >> i) & 1 ? 1 : -1);
      fam.extreme.push_back(std::move(v));
    }
    fam.extreme_exhaustive = true;
  } else {
    // General p: signed axes are valid unit functionals but not exhaustive.
    for (uint32_t i = 0; i < d; ++i) {
      std::vector<Rational> plus(d, Rational(0)), minus(d, Rational(0));
      plus[i] = Rational(1);
      minus[i] = Rational(-1);
      fam.extreme.push_back(std::move(plus));
      fam.extreme.push_back(std::move(minus));
    }
    fam.extreme_exhaustive = false;
  }

  // Seeded rational functionals on a small grid, normalized exactly where the
  // dual norm is rational.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> grid(-64, 64);
  while (fam.sampled.size() < random_count) {
    std::vector<Rational> v(d);
    bool nonzero = false;
    for (uint32_t i = 0; i < d; ++i) {
      v[i] = Rational(grid(rng), 64);
      nonzero = nonzero || !v[i].is_zero();
    }
    if (!nonzero) continue;
    if (const auto norm = dual_norm_exact(y, v)) {
      for (auto& c : v) c /= *norm;
    } else {
      double s = 0;
      for (const auto& c : v) s += std::pow(std::fabs(c.to_double()), 2.0);
      const Rational scale = Rational::from_double(std::sqrt(s));
      for (auto& c : v) c /= scale;
    }
    fam.sampled.push_back(std::move(v));
  }
  return fam;
}

std::vector<std::vector<Rational>> FunctionalFamily::all() const {
  std::vector<std::vector<Rational>> out = extreme;
  out.insert(out.end(), sampled.begin(), sampled.end());
  return out;
}

std::string FunctionalFamily::describe() const {
  return "dual-ball family over " + space.describe() + ": " +
         std::to_string(extreme.size()) + " extreme + " + std::to_string(sampled.size()) +
         " sampled (seed " + std::to_string(seed) + ")";
}

std::string WeakSpec::describe() const {
  return scalar_space.describe() + "^w(" + y.describe() + ")";
}

MembershipCertificate weak_membership_probe(const WeakSpec& ws, const Sequence& seq,
                                            const FunctionalFamily& fam,
                                            const ProbeOptions& opts) {
  if (!seq.values().is_vector())
    throw MixedValueKinds("weak_membership_probe: sequence must be Y-valued");
  if (seq.values().dim() != ws.y.dim)
    throw MixedValueKinds("weak_membership_probe: dimension mismatch");

  MembershipCertificate cert;
  cert.space = ws.describe();
  cert.sequence = seq.describe();

  if (seq.support() == SupportHint::FiniteSupport) {
    cert.method = CertMethod::FunctionalEvaluation;
    cert.verdict = Verdict::In;
    cert.rule = "finite support: phi(x_j) finitely supported for every phi";
    return cert;
  }

  // One escaping functional witnesses Out.
  for (const auto& phi : fam.all()) {
    const Sequence scalar = functional_image(seq, phi);
    const MembershipCertificate c = decide_membership(ws.scalar_space, scalar, opts);
    if (c.verdict == Verdict::Out) {
      cert.verdict = Verdict::Out;
      cert.method = c.method;
      cert.rule = "witness functional " + functional_str(phi) + ": " + c.rule;
      cert.facts.emplace_back("witness", functional_str(phi));
      cert.trace = c.trace;
      cert.exact_value = c.exact_value;
      return cert;
    }
  }

  // Coordinate decomposition: phi(x_j) = sum_i phi_i x_j^(i); if every
  // coordinate sequence is certifiably in F, so is every functional image.
  bool all_in = true;
  std::vector<std::string> coord_rules;
  for (uint32_t i = 0; i < ws.y.dim && all_in; ++i) {
    std::vector<Rational> axis(ws.y.dim, Rational(0));
    axis[i] = Rational(1);
    const Sequence coord = functional_image(seq, axis);
    const MembershipCertificate c = decide_membership(ws.scalar_space, coord, opts);
    all_in = c.verdict == Verdict::In;
    coord_rules.push_back("coordinate " + std::to_string(i + 1) + ": " +
                          to_string(c.verdict));
  }
  if (all_in) {
    cert.verdict = Verdict::In;
    cert.method = CertMethod::SymbolicPowLog;
    cert.rule =
        "every coordinate sequence in F; functional images are finite combinations";
    for (const auto& r : coord_rules) cert.facts.emplace_back("decomposition", r);
    return cert;
  }

  cert.verdict = Verdict::Inconclusive;
  cert.method = CertMethod::PartialNormProbe;
  cert.rule = "no witness functional and no full coordinate decomposition";
  return cert;
}

WeakSupNorm weak_sup_norm(const WeakSpec& ws, const Sequence& seq,
                          const FunctionalFamily& fam, uint64_t n) {
  if (!ws.scalar_space.is_lp() || ws.scalar_space.infinite_p() ||
      ws.scalar_space.p() < Rational(1))
    throw UnsupportedSpace("weak_sup_norm: F must be lp with p >= 1");
  WeakSupNorm best;
  bool first = true;
  for (const auto& phi : fam.all()) {
    const Sequence scalar = functional_image(seq, phi);
    const PartialNorm pn = partial_norm(ws.scalar_space, scalar, n);
    const auto exact = pn.exact_norm();
    const bool better =
        first || (exact && best.exact ? *exact > *best.exact : pn.value > best.value);
    if (better) {
      best.value = pn.value;
      best.exact = exact;
      best.attained_by = phi;
      first = false;
    }
  }
  best.exact_over_ball = fam.extreme_exhaustive;
  return best;
}

MapPropertyReport check_strongly_compatible(const MapSpec& f, const WeakSpec& ws,
                                            const FunctionalFamily& fam,
                                            const std::vector<Sequence>& seqs,
                                            const std::vector<Rational>& alphas,
                                            const ProbeOptions& opts) {
  MapPropertyReport report;
  report.property = "strongly-compatible(" + ws.describe() + ")";
  report.map = f.describe();

  const bool symbolic_map =
      f.kind() == MapSpec::Kind::Identity || f.kind() == MapSpec::Kind::Power;
  const bool symbolic_space =
      ws.scalar_space.is_lp() || ws.scalar_space.kind() == SpaceSpec::Kind::C0;
  if (symbolic_map && symbolic_space) {
    const Rational r =
        f.kind() == MapSpec::Kind::Power ? f.power_exponent() : Rational(1);
    report.verdict = PropertyVerdict::ProvenSymbolic;
    report.detail = "phi(f(alpha x)) = sign(alpha)|alpha|^" + r.str() +
                    " phi(f(x)): scalar compatibility for every phi";
    report.facts.emplace_back(
        "sufficient condition",
        "strongly non-contractive maps are strongly compatible with lp^w and c0^w");
    return report;
  }

  // Sample the contrapositive for every functional in the family.
  uint64_t inconclusive = 0;
  for (const auto& phi : fam.all()) {
    for (const auto& seq : seqs) {
      const Sequence base = functional_image(pushforward(f, seq), phi);
      const auto base_cert = decide_membership(ws.scalar_space, base, opts);
      if (base_cert.verdict != Verdict::Out) {
        if (base_cert.verdict == Verdict::Inconclusive) ++inconclusive;
        continue;
      }
      for (const auto& a : alphas) {
        const Scalar alpha = seq.values().field.exact()
                                 ? Scalar::rational(a)
                                 : Scalar::real(a.to_double());
        const Sequence moved =
            functional_image(pushforward(f, scale_sequence(alpha, seq)), phi);
        const auto moved_cert = decide_membership(ws.scalar_space, moved, opts);
        if (moved_cert.verdict == Verdict::In) {
          report.verdict = PropertyVerdict::Refuted;
          report.detail = "phi o f image re-entered F after alpha-scaling";
          report.witnesses.push_back({a, Value::scalar(Scalar::rational(a)), phi,
                                      seq.describe()});
          return report;
        }
        if (moved_cert.verdict == Verdict::Inconclusive) ++inconclusive;
      }
    }
  }
  report.verdict = PropertyVerdict::HoldsOnSamples;
  report.detail = "no functional-level contrapositive violation on the grid";
  report.facts.emplace_back("inconclusive_probes", std::to_string(inconclusive));
  return report;
}

GeneratedSubspace generate_weak(Sequence mother, SpaceSpec ambient, MapSpec f,
                                std::vector<SpaceSpec> scalar_family,
                                const FunctionalFamily& fam, const ProbeOptions& opts) {
  if (!mother.values().is_vector())
    throw MixedValueKinds("generate_weak: mother vector must be Y-valued");
  NestedFamily family(std::move(scalar_family));  // nestedness of F_lambda, inherited
  const VectorSpaceSpec y = fam.space;

  std::vector<MemberDecider> deciders;
  for (const auto& member : family.members()) {
    WeakSpec ws{member, y};
    const ProbeOptions o = opts;
    const FunctionalFamily fam_copy = fam;
    deciders.push_back({ws.describe(), [ws, fam_copy, o](const Sequence& s) {
                          return weak_membership_probe(ws, s, fam_copy, o);
                        }});
  }

  TargetSpec target{std::move(ambient), std::move(f), std::move(family)};
  return GeneratedSubspace::build_with_deciders(std::move(mother), std::move(target),
                                                std::move(deciders), opts);
}

}  // namespace seqspace
