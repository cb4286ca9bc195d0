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

#include "seqspace/construction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace seqspace {

std::string TargetSpec::describe() const {
  return "G(" + ambient.describe() + ", " + map.describe() + ", " + family.describe() + ")";
}

// ---- partition ------------------------------------------------------------------

IndexPartition IndexPartition::from_half(HalfChoice half) { return IndexPartition(half); }

IndexSet IndexPartition::block(uint32_t i) const {
  if (i == 0) throw SeqspaceError("IndexPartition::block: blocks start at 1");
  if (half_ == HalfChoice::Odds) {
    if (i == 1) return IndexSet::odds();
    return IndexSet::dyadic_ray(i);
  }
  if (i == 1) return IndexSet::evens();
  // Image of ray(i-1) under the enumeration m -> 2m - 1 of the odds.
  return IndexSet::dyadic_ray_affine(i - 1, 2, -1);
}

std::pair<uint32_t, uint64_t> IndexPartition::locate(uint64_t j) const {
  if (j < 1) throw SeqspaceError("IndexPartition::locate: positions start at 1");
  if (half_ == HalfChoice::Odds) {
    if (j % 2 == 1) return {1, (j + 1) / 2};
    // j = 2^v (2m - 1) with v >= 1 lives in block v + 1.
    const unsigned v = std::countr_zero(j);
    return {v + 1, ((j >> v) + 1) / 2};
  }
  if (j % 2 == 0) return {1, j / 2};
  // j odd: j = 2 r - 1 with r = 2^(v) (2m - 1); block index v + 2.
  const uint64_t r = (j + 1) / 2;
  const unsigned v = std::countr_zero(r);
  return {static_cast<uint32_t>(v + 2), ((r >> v) + 1) / 2};
}

std::string IndexPartition::describe() const {
  return half_ == HalfChoice::Odds ? "N1 = odds, Ni = dyadic rays"
                                   : "N1 = evens, Ni = dyadic rays through the odds";
}

// ---- half selection ---------------------------------------------------------------

std::vector<MemberDecider> strong_deciders(const NestedFamily& family,
                                           const ProbeOptions& opts) {
  std::vector<MemberDecider> out;
  for (const auto& member : family.members()) {
    const SpaceSpec space = member;
    const ProbeOptions o = opts;
    out.push_back({space.describe(),
                   [space, o](const Sequence& s) { return decide_membership(space, s, o); }});
  }
  return out;
}

namespace {

struct FamilyVerdict {
  bool all_out = true;
  bool any_in = false;
  bool any_inconclusive = false;
  std::vector<MembershipCertificate> certs;
};

FamilyVerdict family_verdict(const std::vector<MemberDecider>& deciders,
                             const Sequence& seq) {
  FamilyVerdict fv;
  for (const auto& d : deciders) {
    MembershipCertificate c = d.decide(seq);
    fv.all_out = fv.all_out && c.verdict == Verdict::Out;
    fv.any_in = fv.any_in || c.verdict == Verdict::In;
    fv.any_inconclusive = fv.any_inconclusive || c.verdict == Verdict::Inconclusive;
    fv.certs.push_back(std::move(c));
  }
  return fv;
}

MembershipCertificate union_certificate(const FamilyVerdict& fv, const std::string& what) {
  MembershipCertificate cert = fv.certs.back();  // inclusion-maximal member
  cert.rule = what + ": out of every family member (maximal member shown)";
  for (const auto& c : fv.certs)
    cert.facts.emplace_back(c.space, to_string(c.verdict));
  return cert;
}

std::pair<IndexSet, MembershipCertificate> select_half_with(
    const std::vector<MemberDecider>& deciders, const Sequence& fx) {
  const FamilyVerdict whole = family_verdict(deciders, fx);
  if (whole.any_in)
    throw NotAdmissible(
        "select_divergent_half: image of the mother vector does not escape the family"
        " (the target set gives nothing to build through this point)");
  if (!whole.all_out)
    throw InconclusiveSplit(
        "select_divergent_half: family membership of the image inconclusive at budget");

  const Sequence on_odds = restrict_to(fx, IndexSet::odds());
  const FamilyVerdict odds = family_verdict(deciders, on_odds);
  if (odds.all_out)
    return {IndexSet::odds(), union_certificate(odds, "odd subsequence")};

  const Sequence on_evens = restrict_to(fx, IndexSet::evens());
  const FamilyVerdict evens = family_verdict(deciders, on_evens);
  if (evens.all_out)
    return {IndexSet::evens(), union_certificate(evens, "even subsequence")};

  // The dichotomy says both halves cannot be members; failing to certify either
  // is a budget problem, not a refutation.
  throw InconclusiveSplit(
      "select_divergent_half: neither half certifiably out at budget");
}

}  // namespace

std::pair<IndexSet, MembershipCertificate> select_divergent_half(const Sequence& x,
                                                                 const TargetSpec& target,
                                                                 const ProbeOptions& opts) {
  return select_half_with(strong_deciders(target.family, opts),
                          pushforward(target.map, x));
}

IndexPartition build_partition(const IndexSet& half) {
  const auto ap = half.ap_view();
  if (ap && ap->first == 2 && ap->second == -1)
    return IndexPartition::from_half(HalfChoice::Odds);
  if (ap && ap->first == 2 && ap->second == 0)
    return IndexPartition::from_half(HalfChoice::Evens);
  throw SeqspaceError("build_partition: the half must be the odds or the evens");
}

// ---- subspace -------------------------------------------------------------------

GeneratedSubspace GeneratedSubspace::build(Sequence mother, TargetSpec target,
                                           const ProbeOptions& opts) {
  std::vector<MemberDecider> deciders = strong_deciders(target.family, opts);
  return build_with_deciders(std::move(mother), std::move(target), std::move(deciders),
                             opts);
}

GeneratedSubspace GeneratedSubspace::build_with_deciders(Sequence mother, TargetSpec target,
                                                         std::vector<MemberDecider> deciders,
                                                         const ProbeOptions& opts) {
  // Degenerate mothers are rejected: the construction needs infinitely many
  // nonzero coordinates, which a finite-support or opaque generator cannot
  // witness.
  if (mother.support() == SupportHint::FiniteSupport)
    throw NotAdmissible("GeneratedSubspace: mother vector has finite support");
  if (mother.support() != SupportHint::Infinite && !mother.envelope())
    throw NotAdmissible(
        "GeneratedSubspace: mother vector needs an infinite-support hint or an envelope");

  std::vector<MembershipCertificate> admission;
  // x must belong to the ambient space E.
  MembershipCertificate ambient_cert =
      decide_membership(target.ambient, mother, opts);
  if (ambient_cert.verdict == Verdict::Out)
    throw NotAdmissible("GeneratedSubspace: mother vector is outside the ambient space " +
                        target.ambient.describe());
  admission.push_back(ambient_cert);

  const Sequence fx = pushforward(target.map, mother);
  FamilyVerdict whole = family_verdict(deciders, fx);
  if (whole.any_in)
    throw NotAdmissible("GeneratedSubspace: image of the mother vector lies in a family "
                        "member; the point is not in the target set");
  if (!whole.all_out)
    throw InconclusiveSplit(
        "GeneratedSubspace: family membership of the mother image inconclusive at budget");
  for (auto& c : whole.certs) admission.push_back(std::move(c));

  auto [half, half_cert] = select_half_with(deciders, fx);
  IndexPartition part = build_partition(half);

  const Rational stilde =
      target.ambient.banach() ? Rational(1) : target.ambient.quasi_exponent();

  return GeneratedSubspace(std::move(mother), std::move(target), std::move(part), stilde,
                           std::move(admission), std::move(half_cert), std::move(deciders));
}

Sequence GeneratedSubspace::basis(uint32_t i) const {
  if (i == 0) throw SeqspaceError("GeneratedSubspace::basis: indices start at 1");
  if (i == 1) return mother_;  // the subspace passes through the given point
  return embed_into(mother_, partition_.block(i));
}

Sequence generate_basis(const GeneratedSubspace& sub, uint32_t i) { return sub.basis(i); }

// ---- combinations ---------------------------------------------------------------

ClosedFormCombination::ClosedFormCombination(Sequence mother, IndexPartition part,
                                             std::vector<Scalar> coeffs)
    : mother_(std::move(mother)), part_(std::move(part)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw SeqspaceError("ClosedFormCombination: empty coefficients");
}

Value ClosedFormCombination::coordinate(uint64_t r) const {
  const auto [i, m] = part_.locate(r);
  Value out = mother_.eval(r).scaled(coeffs_[0]);
  if (i >= 2 && i <= coeffs_.size() && !coeffs_[i - 1].is_zero())
    out = out + mother_.eval(m).scaled(coeffs_[i - 1]);
  return out;
}

std::pair<Sequence, ClosedFormCombination> combine(const GeneratedSubspace& sub,
                                                   const std::vector<Scalar>& coeffs) {
  if (coeffs.empty()) throw SeqspaceError("combine: empty coefficient list");
  std::vector<std::pair<Scalar, Sequence>> terms;
  terms.reserve(coeffs.size());
  for (uint32_t i = 0; i < coeffs.size(); ++i)
    terms.emplace_back(coeffs[i], sub.basis(i + 1));
  Sequence lazy = linear_combine(terms);
  return {std::move(lazy),
          ClosedFormCombination(sub.mother(), sub.partition(), coeffs)};
}

// ---- rank -----------------------------------------------------------------------

namespace {
constexpr uint64_t kFirstNonzeroScanLimit = 1'000'000;

// First m with mother(m) != 0; the proof only needs one nonzero coordinate.
uint64_t first_nonzero_of(const Sequence& mother) {
  for (uint64_t m = 1; m <= kFirstNonzeroScanLimit; ++m)
    if (!mother.eval(m).is_zero()) return m;
  throw InsufficientTruncation("verify_independence: mother vector looks zero");
}
}  // namespace

RankReport verify_independence(const GeneratedSubspace& sub, uint32_t k, uint64_t n) {
  if (k < 1) throw SeqspaceError("verify_independence: k >= 1 required");
  if (!sub.mother().values().field.exact())
    throw SeqspaceError("verify_independence: exact rank needs rational mode");

  RankReport report;
  report.k = k;
  report.n_requested = n;
  uint64_t n_eff = n;

  // Sparse rows of the truncation matrix, flattened componentwise for vector
  // values (column = (position - 1) * dim + component).
  const uint32_t dim = sub.mother().values().dim();
  const uint64_t m0 = first_nonzero_of(sub.mother());
  std::vector<std::map<uint64_t, Rational>> rows(k);

  auto add_value = [&](uint32_t row, uint64_t position, const Value& v) {
    for (uint32_t c = 0; c < dim; ++c) {
      const Scalar& s = dim == 1 && !v.is_vector() ? v.as_scalar() : v.component(c);
      if (!s.is_zero()) rows[row][(position - 1) * dim + c] = s.rat();
    }
  };

  for (uint32_t i = 1; i <= k; ++i) {
    const Sequence yi = sub.basis(i);
    const IndexSet Si = sub.partition().block(i);
    // Columns inside the requested truncation.
    const uint64_t count = Si.count_leq(std::min(n, uint64_t(1) << 62));
    for (uint64_t m = 1; m <= count; ++m) {
      const uint64_t j = Si.enumerate(m);
      add_value(i - 1, j, yi.eval(j));
    }
    if (i == 1) {
      // y_1 is the mother itself: full support, not only the half.
      for (uint64_t j = 1; j <= n && j <= (uint64_t(1) << 20); ++j)
        if (!Si.contains(j)) add_value(0, j, sub.mother().eval(j));
    }
    if (rows[i - 1].empty()) {
      // Auto-expand: the first nonzero coordinate of y_i sits at the image of
      // the mother's first nonzero position.
      const uint64_t j = i == 1 ? m0 : Si.enumerate(m0);
      add_value(i - 1, j, yi.eval(j));
      if (rows[i - 1].empty())
        throw InsufficientTruncation(
            "verify_independence: no nonzero coordinate found for basis row " +
            std::to_string(i));
      n_eff = std::max(n_eff, j);
    }
  }
  report.n_effective = std::max(n_eff, n);

  // Row echelon by least leading column; pivoting on the global minimum keeps
  // every other active row free of entries left of its own leading column.
  std::vector<bool> active(k, true);
  uint32_t rank = 0;
  while (true) {
    uint32_t pivot_row = k;
    uint64_t pivot_col = ~uint64_t(0);
    for (uint32_t r = 0; r < k; ++r)
      if (active[r] && !rows[r].empty() && rows[r].begin()->first < pivot_col) {
        pivot_col = rows[r].begin()->first;
        pivot_row = r;
      }
    if (pivot_row == k) break;
    ++rank;
    active[pivot_row] = false;
    const Rational pivot = rows[pivot_row].begin()->second;
    for (uint32_t r = 0; r < k; ++r) {
      if (!active[r] || rows[r].empty() || rows[r].begin()->first != pivot_col) continue;
      const Rational factor = rows[r].begin()->second / pivot;
      for (const auto& [col, val] : rows[pivot_row]) {
        auto it = rows[r].find(col);
        if (it == rows[r].end()) {
          rows[r][col] = -(factor * val);
        } else {
          it->second -= factor * val;
          if (it->second.is_zero()) rows[r].erase(it);
        }
      }
    }
  }

  report.rank = rank;
  report.full_rank = rank == k;
  if (report.n_effective > report.n_requested)
    report.notes = "truncation auto-expanded to reach every block";
  return report;
}

// ---- membership of combinations ----------------------------------------------------

std::string CombinationCertificate::describe_case() const {
  switch (combination_case) {
    case Case::A1Nonzero:
      return "a1-nonzero";
    case Case::A1ZeroApNonzero:
      return "a1-zero-ap-nonzero";
    case Case::AllZero:
      return "all-zero";
  }
  return "?";
}

CombinationCertificate verify_membership(const GeneratedSubspace& sub,
                                         const std::vector<Scalar>& coeffs,
                                         const ProbeOptions& opts) {
  (void)opts;
  CombinationCertificate cert;
  for (const auto& a : coeffs) cert.coefficients.push_back(a.str());

  uint32_t p = 0;
  for (uint32_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) {
      p = i + 1;
      break;
    }
  if (p == 0) {
    cert.combination_case = CombinationCertificate::Case::AllZero;
    cert.lift = "zero combination: excluded from membership claims";
    return cert;
  }
  cert.p_index = p;

  Sequence escaping_values = [&]() {
    if (p == 1) {
      // Along block 1 the combination is a_1 * (x_j)_{j in N1}.
      cert.combination_case = CombinationCertificate::Case::A1Nonzero;
      cert.escaping_subsequence = sub.partition().block(1);
      return scale_sequence(coeffs[0],
                            restrict_to(sub.mother(), *cert.escaping_subsequence));
    }
    // Along block p the combination is a_p * x (the whole mother vector).
    cert.combination_case = CombinationCertificate::Case::A1ZeroApNonzero;
    cert.escaping_subsequence = sub.partition().block(p);
    return scale_sequence(coeffs[p - 1], sub.mother());
  }();

  const Sequence image = pushforward(sub.target().map, escaping_values);
  bool all_out = true, inconclusive = false;
  for (const auto& d : sub.deciders()) {
    MembershipCertificate c = d.decide(image);
    all_out = all_out && c.verdict == Verdict::Out;
    inconclusive = inconclusive || c.verdict == Verdict::Inconclusive;
    cert.per_member.push_back(std::move(c));
  }
  cert.all_out = all_out;
  cert.inconclusive = inconclusive;
  cert.lift =
      "the combination restricted to " + cert.escaping_subsequence->describe() +
      " has an out-of-member image; closure under subsequences (strong invariance) "
      "lifts the escape to the full combination";
  return cert;
}

// ---- series bound ---------------------------------------------------------------

namespace {

// Formal sum of terms coeff * radicand^(1/root); exact equality is multiset
// equality after merging like terms.
struct RadicalTerm {
  unsigned long root;
  Rational radicand;
  Rational coeff;
};

void merge_terms(std::vector<RadicalTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const RadicalTerm& a, const RadicalTerm& b) {
    if (a.root != b.root) return a.root < b.root;
    return a.radicand < b.radicand;
  });
  std::vector<RadicalTerm> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().root == t.root &&
        merged.back().radicand == t.radicand)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const RadicalTerm& t) {
    return t.coeff.is_zero() || t.radicand.is_zero();
  });
  terms = std::move(merged);
}

bool terms_equal(std::vector<RadicalTerm> a, std::vector<RadicalTerm> b) {
  merge_terms(a);
  merge_terms(b);
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].root != b[i].root || !(a[i].radicand == b[i].radicand) ||
        !(a[i].coeff == b[i].coeff))
      return false;
  return true;
}

double terms_value(const std::vector<RadicalTerm>& terms) {
  double v = 0.0;
  for (const auto& t : terms)
    v += t.coeff.to_double() *
         std::pow(t.radicand.to_double(), 1.0 / static_cast<double>(t.root));
  return v;
}

// First `count` nonzero magnitudes of seq, walking the given block only.
std::vector<Rational> block_magnitudes(const Sequence& seq, const IndexSet& block,
                                       uint64_t count) {
  std::vector<Rational> out;
  uint64_t m = 0;
  while (out.size() < count) {
    ++m;
    if (m > kFirstNonzeroScanLimit)
      throw InsufficientTruncation("series_bound_check: not enough nonzero coordinates");
    const Value v = seq.eval(block.enumerate(m));
    if (v.is_zero()) continue;
    const Magnitude mag = v.norm(seq.values());
    if (!mag.exact)
      throw SeqspaceError("series_bound_check: exact magnitudes required");
    out.push_back(*mag.exact);
  }
  return out;
}

std::vector<Rational> mother_zero_free_magnitudes(const Sequence& mother, uint64_t count) {
  const Sequence m0 = zero_free_version(mother);
  std::vector<Rational> out;
  for (uint64_t kk = 1; kk <= count; ++kk) {
    const Magnitude mag = m0.eval(kk).norm(mother.values());
    if (!mag.exact) throw SeqspaceError("series_bound_check: exact magnitudes required");
    out.push_back(*mag.exact);
  }
  return out;
}

}  // namespace

SeriesBoundReport series_bound_check(const GeneratedSubspace& sub,
                                     const std::vector<Scalar>& coeffs, uint64_t terms) {
  const SpaceSpec& E = sub.target().ambient;
  if (!E.is_lp())
    throw UnsupportedSpace("series_bound_check: truncated norms need an lp ambient space");
  if (terms < 1) throw SeqspaceError("series_bound_check: need at least one term");

  SeriesBoundReport report;
  report.stilde = sub.series_exponent();
  report.terms_per_basis = terms;

  const bool sup = E.infinite_p();
  const Rational p = sup ? Rational(1) : E.p();  // exponent for power sums
  const auto pu = p.num_long();
  const auto pv = p.den_ulong();
  if (!pu || !pv) throw SeqspaceError("series_bound_check: lp exponent too large");

  const bool quasi = !sup && p < Rational(1);  // stilde = p, else stilde = 1

  // ||y||^s~ truncated to `terms` nonzero coordinates, as radical terms:
  //   banach: coeff * (sum mag^p)^(1/p)      -> root u, radicand (sum)^v
  //   quasi:  sum (coeff_abs * mag)^p        -> per-coordinate root v,
  //            radicand (coeff_abs * mag)^u
  //   sup:    coeff * max mag                -> root 1
  auto side_terms = [&](const std::vector<std::vector<Rational>>& magnitudes_per_basis)
      -> std::vector<RadicalTerm> {
    std::vector<RadicalTerm> out;
    for (uint32_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      const Rational a = coeffs[i].mode() == ScalarMode::RealRational
                             ? coeffs[i].rat().abs()
                             : Rational::from_double(std::fabs(coeffs[i].to_double()));
      const auto& mags = magnitudes_per_basis[i];
      if (sup) {
        Rational mx(0);
        for (const auto& m : mags) mx = std::max(mx, m);
        out.push_back({1, mx, a});
      } else if (quasi) {
        for (const auto& m : mags)
          out.push_back({*pv, (a * m).pow_int(*pu), Rational(1)});
      } else {
        // Exact power sums need integer p >= 1 (the quasi branch covers p < 1).
        if (*pv != 1)
          throw UnsupportedSpace(
              "series_bound_check: exact route needs integer p >= 1 or p < 1");
        Rational sum(0);
        for (const auto& m : mags) sum += m.pow_int(*pu);
        out.push_back({static_cast<unsigned long>(*pu), sum, a});
      }
    }
    return out;
  };

  // Left side: magnitudes read off each basis vector through its own block.
  std::vector<std::vector<Rational>> lhs_mags(coeffs.size());
  for (uint32_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    if (i == 0) {
      // y_1 = mother: first `terms` nonzero coordinates by direct scan (the
      // right side goes through the zero-free view instead).
      std::vector<Rational> direct;
      uint64_t j = 0;
      while (direct.size() < terms) {
        ++j;
        if (j > kFirstNonzeroScanLimit)
          throw InsufficientTruncation("series_bound_check: mother too sparse");
        const Value v = sub.mother().eval(j);
        if (v.is_zero()) continue;
        const Magnitude mag = v.norm(sub.mother().values());
        if (!mag.exact)
          throw SeqspaceError("series_bound_check: exact magnitudes required");
        direct.push_back(*mag.exact);
      }
      lhs_mags[0] = std::move(direct);
    } else {
      lhs_mags[i] = block_magnitudes(sub.basis(i + 1), sub.partition().block(i + 1), terms);
    }
  }
  const std::vector<RadicalTerm> lhs = side_terms(lhs_mags);

  // Right side: K^s~ ||x0||^s~ sum |a_i|^s~ with K = 1, all built from the
  // zero-free mother.
  const std::vector<Rational> x0 = mother_zero_free_magnitudes(sub.mother(), terms);
  std::vector<std::vector<Rational>> rhs_mags(coeffs.size());
  for (uint32_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) rhs_mags[i] = x0;
  const std::vector<RadicalTerm> rhs = side_terms(rhs_mags);

  report.lhs = terms_value(lhs);
  report.rhs = terms_value(rhs);
  report.exact_equal = terms_equal(lhs, rhs);
  report.holds = report.exact_equal || report.lhs <= report.rhs * (1.0 + 1e-12);
  report.note = "matched truncation: first " + std::to_string(terms) +
                " nonzero coordinates per basis vector; K = 1";
  return report;
}

}  // namespace seqspace
