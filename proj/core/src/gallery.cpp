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

#include "seqspace/gallery.hpp"

#include <array>

namespace seqspace {

Sequence kernel_witness(ScalarField field) {
  return periodic_geometric_sequence(
      {Scalar::rational(Rational(1)), Scalar::rational(Rational(-1))}, Rational(1, 2),
      field);
}

RegressionReport kernel_space_counterexample() {
  RegressionReport report;
  report.name = "kernel-space";
  report.passed = true;
  auto expect = [&](bool ok, const std::string& what) {
    report.findings.push_back(std::string(ok ? "[ok] " : "[FAIL] ") + what);
    report.passed = report.passed && ok;
  };

  const SpaceSpec E = SpaceSpec::kernel();
  const Sequence w = kernel_witness();

  // The witness lies in E: exact functional sum 0, absolutely summable.
  const auto w_cert = decide_membership(E, w);
  expect(w_cert.verdict == Verdict::In && w_cert.exact_value &&
             w_cert.exact_value->is_zero(),
         "witness (1,-1,1/2,-1/2,...) lies in the kernel space (functional sum 0)");

  // The odd-position subsequence (1, 1/2, 1/4, ...) sums to exactly 2.
  const Sequence odd_sub = restrict_to(w, IndexSet::odds());
  const auto odd_cert = decide_membership(E, odd_sub);
  expect(odd_cert.verdict == Verdict::Out && odd_cert.exact_value &&
             *odd_cert.exact_value == Rational(2),
         "odd-position subsequence escapes: functional value exactly 2");

  // e_1 is finitely supported but not in E, so c00 is not contained.
  const auto e1_cert = decide_membership(E, unit_coordinate_sequence(1, ScalarField{}));
  expect(e1_cert.verdict == Verdict::Out && e1_cert.exact_value &&
             *e1_cert.exact_value == Rational(1),
         "e_1 not a member: c00 is not contained in the kernel space");

  // Invariant axioms hold with ||w0|| = ||w|| (the witness has no zeros).
  const auto inv = check_invariant_axioms(E, {w}, 64);
  expect(inv.passed && inv.K_estimate == 1.0,
         "invariant axioms pass with ||x0|| = ||x|| (K = 1)");

  // The strong-invariance check must flag both failures.
  const auto strong = check_strongly_invariant(E, {w}, {IndexSet::odds()}, 64);
  bool found_subsequence = false, found_c00 = false;
  for (const auto& v : strong.violations) {
    if (!v.pattern.empty() && v.functional_value && *v.functional_value == Rational(2))
      found_subsequence = true;
    if (v.pattern.empty()) found_c00 = true;
  }
  expect(!strong.passed && found_subsequence,
         "strongly-invariant check refutes with the odd-subsequence witness");
  expect(!strong.c00_contained && found_c00,
         "strongly-invariant check refutes c00 containment via e_1");

  // Truncated l1 norms increase toward the limit value 4.
  const auto n8 = partial_norm(E, w, 8);
  const auto n32 = partial_norm(E, w, 32);
  expect(n8.exact_sum && n32.exact_sum && *n8.exact_sum < *n32.exact_sum &&
             *n32.exact_sum < Rational(4),
         "truncated l1 norms increase toward 4");

  return report;
}

namespace {

Rational dot(const std::vector<Rational>& phi, const std::vector<Rational>& v) {
  Rational s(0);
  for (size_t i = 0; i < phi.size(); ++i) s += phi[i] * v[i];
  return s;
}

// Basis of the joint kernel of the functionals, by rational elimination.
std::vector<std::vector<Rational>> nullspace_basis(
    std::vector<std::vector<Rational>> rows, size_t dim) {
  // Reduced row echelon form.
  size_t lead = 0;
  std::vector<size_t> pivot_cols;
  for (size_t r = 0; r < rows.size() && lead < dim; ++r) {
    size_t p = r;
    while (p < rows.size() && rows[p][lead].is_zero()) ++p;
    if (p == rows.size()) {
      --r;
      ++lead;
      continue;
    }
    std::swap(rows[p], rows[r]);
    const Rational inv = rows[r][lead].reciprocal();
    for (auto& c : rows[r]) c *= inv;
    for (size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][lead].is_zero()) continue;
      const Rational f = rows[q][lead];
      for (size_t c = 0; c < dim; ++c) rows[q][c] -= f * rows[r][c];
    }
    pivot_cols.push_back(lead);
    ++lead;
  }
  std::vector<std::vector<Rational>> basis;
  for (size_t free = 0; free < dim; ++free) {
    bool is_pivot = false;
    for (size_t pc : pivot_cols) is_pivot = is_pivot || pc == free;
    if (is_pivot) continue;
    std::vector<Rational> v(dim, Rational(0));
    v[free] = Rational(1);
    for (size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Scaling argument on A = {x : |phi_i(x)| < eps for all i}: the joint kernel
// sits inside A at every scale, while any point off it escapes under the
// rescaling (eps + 1)/|phi_i(x)|.
bool neighborhood_demo(const std::vector<std::vector<Rational>>& functionals,
                       const std::vector<Rational>& y0, const Rational& eps,
                       std::vector<std::string>* findings) {
  const size_t dim = y0.size();
  bool ok = true;
  auto expect = [&](bool cond, const std::string& what) {
    findings->push_back(std::string(cond ? "[ok] " : "[FAIL] ") + what);
    ok = ok && cond;
  };

  const auto kernel = nullspace_basis(functionals, dim);
  expect(kernel.size() == dim - functionals.size(),
         "joint kernel has dimension d - n (" + std::to_string(kernel.size()) + ")");
  bool killed = true;
  for (const auto& v : kernel)
    for (const auto& phi : functionals) killed = killed && dot(phi, v).is_zero();
  expect(killed, "kernel basis vectors satisfy every phi_i = 0 exactly");

  Rational delta(0);
  size_t witness = 0;
  for (size_t i = 0; i < functionals.size(); ++i) {
    const Rational v = dot(functionals[i], y0).abs();
    if (v > delta) {
      delta = v;
      witness = i;
    }
  }
  expect(delta.sign() > 0, "y0 lies outside the joint kernel (delta = " + delta.str() + ")");

  const Rational scale_in = eps / (Rational(2) * delta);
  std::vector<Rational> inside(dim);
  for (size_t i = 0; i < dim; ++i) inside[i] = scale_in * y0[i];
  bool in_A = true;
  for (const auto& phi : functionals) in_A = in_A && dot(phi, inside).abs() < eps;
  expect(in_A, "the eps/(2 delta)-scaling of y0 enters the set");

  const Rational attained = dot(functionals[witness], inside).abs();
  const Rational scale_out = (eps + Rational(1)) / attained;
  std::vector<Rational> outside(dim);
  for (size_t i = 0; i < dim; ++i) outside[i] = scale_out * inside[i];
  expect(dot(functionals[witness], outside).abs() == eps + Rational(1),
         "rescaling by " + scale_out.str() + " exits: |phi| = " + (eps + Rational(1)).str() +
             " > " + eps.str());
  return ok;
}

}  // namespace

RegressionReport finite_dim_pointwise_failure() {
  RegressionReport report;
  report.name = "finite-dimensional";
  report.passed = true;
  auto expect = [&](bool ok, const std::string& what) {
    report.findings.push_back(std::string(ok ? "[ok] " : "[FAIL] ") + what);
    report.passed = report.passed && ok;
  };

  // (i) A = (K^2 x {0}) union {(1,1,1)} in K^3: the plane is a 2-dimensional
  // subspace inside A, but no subspace fits through the extra point.
  using Vec3 = std::array<Rational, 3>;
  const Vec3 point{Rational(1), Rational(1), Rational(1)};
  auto in_A = [&](const Vec3& v) {
    if (v[2].is_zero()) return true;  // the plane
    return v[0] == point[0] && v[1] == point[1] && v[2] == point[2];
  };
  expect(in_A(point), "the distinguished point belongs to the set");
  const Vec3 doubled{Rational(2), Rational(2), Rational(2)};
  expect(!in_A(doubled),
         "2x escapes the set: no subspace through the point stays inside");
  bool plane_closed = true;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      plane_closed =
          plane_closed && in_A(Vec3{Rational(a), Rational(b), Rational(0)});
  expect(plane_closed, "the coordinate plane is a 2-dimensional subspace inside the set");

  // (ii) Neighborhood demo A = {x : |phi_i(x)| < eps}. First the K^3 instance
  // with phi = third coordinate and eps = 1: (0,0,1/2) is inside, 4x is not.
  const bool small = neighborhood_demo({{Rational(0), Rational(0), Rational(1)}},
                                       {Rational(0), Rational(0), Rational(1)}, Rational(1),
                                       &report.findings);
  report.passed = report.passed && small;

  // Then a K^4 instance with two functionals, where the joint kernel is a
  // genuinely computed 2-dimensional nullspace.
  const bool larger = neighborhood_demo(
      {{Rational(1), Rational(1), Rational(0), Rational(0)},
       {Rational(0), Rational(1, 2), Rational(0), Rational(-1)}},
      {Rational(1), Rational(1), Rational(1), Rational(1)}, Rational(1, 3),
      &report.findings);
  report.passed = report.passed && larger;

  return report;
}

std::vector<Sequence> mother_vector_catalog(const Rational& p,
                                            const std::vector<Rational>& gamma,
                                            ScalarField field) {
  if (p.sign() <= 0) throw SeqspaceError("mother_vector_catalog: p must be positive");
  for (const auto& q : gamma) {
    if (q.sign() <= 0)
      throw SeqspaceError("mother_vector_catalog: probes must be positive");
    if (!(q < p))
      throw EmptyCatalog("mother_vector_catalog: probe q = " + q.str() +
                         " reaches p = " + p.str() + "; the set would be empty");
  }
  const Rational a = p.reciprocal();
  std::vector<Sequence> catalog;
  catalog.push_back(powlog_sequence(a, Rational(2) * a, Rational(1), field));
  catalog.push_back(powlog_sequence(a, Rational(2) * a, Rational(2), field));
  catalog.push_back(powlog_sequence(a, Rational(3) * a, Rational(1), field));

  // Every entry must be in lp and out of each probed lq.
  const SpaceSpec home = SpaceSpec::lp(p);
  for (const auto& m : catalog) {
    if (decide_membership_symbolic(home, m).verdict != Verdict::In)
      throw SeqspaceError("mother_vector_catalog: entry not in lp(" + p.str() + ")");
    for (const auto& q : gamma)
      if (decide_membership_symbolic(SpaceSpec::lp(q), m).verdict != Verdict::Out)
        throw SeqspaceError("mother_vector_catalog: entry not out of lq(" + q.str() + ")");
  }
  return catalog;
}

std::vector<Sequence> envelope_corpus(ScalarField field) {
  // (a, b, c) triples; see the header note on how the constants were sized
  // against the default threshold 10^3 and budget 10^5.
  static const std::array<std::array<const char*, 3>, 20> table{{
      {"0", "0", "4"},
      {"-1/2", "0", "4"},
      {"-1", "0", "1"},
      {"1/4", "0", "64"},
      {"1/2", "0", "64"},
      {"1", "0", "64"},
      {"1", "2", "1"},
      {"2", "0", "16"},
      {"3", "0", "1"},
      {"0", "1", "64"},
      {"0", "-1", "128"},
      {"2", "-4", "1"},
      {"1/2", "1", "32"},
      {"3/2", "0", "8"},
      {"9/10", "0", "64"},
      {"1", "1", "16"},
      {"5/2", "0", "2"},
      {"-2", "0", "1"},
      {"1/10", "0", "16"},
      {"4", "8", "1"},
  }};
  std::vector<Sequence> out;
  out.reserve(table.size());
  for (const auto& row : table)
    out.push_back(powlog_sequence(Rational::parse(row[0]), Rational::parse(row[1]),
                                  Rational::parse(row[2]), field));
  return out;
}

}  // namespace seqspace
