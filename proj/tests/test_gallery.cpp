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

#include <doctest.h>

#include "seqspace/gallery.hpp"

using namespace seqspace;

namespace {
const ScalarField kRat{};
}

TEST_CASE("the kernel-space regression passes deterministically") {
  for (int run = 0; run < 2; ++run) {
    const auto report = kernel_space_counterexample();
    CHECK(report.passed);
    CHECK(report.findings.size() == 7);
    for (const auto& f : report.findings) CHECK(f.rfind("[ok]", 0) == 0);
  }
}

TEST_CASE("the finite-dimensional regression passes") {
  const auto report = finite_dim_pointwise_failure();
  CHECK(report.passed);
  for (const auto& f : report.findings) CHECK(f.rfind("[ok]", 0) == 0);
}

TEST_CASE("catalog mothers are certified against their probes") {
  // p = 1: the mother 1/(j log^2(j+1)) is in l1 and out of every lq, q < 1.
  const auto mothers =
      mother_vector_catalog(Rational(1), {Rational(1, 2), Rational(3, 4)}, kRat);
  REQUIRE(mothers.size() >= 1);
  const auto primary = decide_membership_symbolic(SpaceSpec::lp(Rational(1)), mothers[0]);
  CHECK(primary.verdict == Verdict::In);
  CHECK(mothers[0].envelope()->a == Rational(1));
  CHECK(mothers[0].envelope()->b == Rational(2));

  // p = 2, probe q = 1: a = 1/2, b = 1 is in l2 (qa = 1, qb = 2 > 1) and out
  // of l1 (qa = 1/2 < 1).
  const auto m2 = mother_vector_catalog(Rational(2), {Rational(1)}, kRat);
  CHECK(decide_membership_symbolic(SpaceSpec::lp(Rational(2)), m2[0]).verdict ==
        Verdict::In);
  CHECK(decide_membership_symbolic(SpaceSpec::lp(Rational(1)), m2[0]).verdict ==
        Verdict::Out);
}

TEST_CASE("probes at or beyond p empty the catalog") {
  CHECK_THROWS_AS(mother_vector_catalog(Rational(1), {Rational(1)}, kRat), EmptyCatalog);
  CHECK_THROWS_AS(mother_vector_catalog(Rational(1, 2), {Rational(2)}, kRat), EmptyCatalog);
}

TEST_CASE("the corpus carries twenty envelope-backed sequences") {
  const auto corpus = envelope_corpus();
  CHECK(corpus.size() == 20);
  for (const auto& s : corpus) CHECK(s.envelope().has_value());
}

TEST_CASE("catalog mothers drive the full pipeline end to end") {
  for (const char* p_str : {"1/2", "1", "2"}) {
    const Rational p = Rational::parse(p_str);
    const std::vector<Rational> gamma{p / Rational(2), p * Rational(3, 4)};
    const auto mothers = mother_vector_catalog(p, gamma, kRat);
    TargetSpec target{SpaceSpec::lp(p), MapSpec::identity(),
                      NestedFamily({SpaceSpec::lp(gamma[0]), SpaceSpec::lp(gamma[1])})};
    for (const auto& mother : mothers) {
      const GeneratedSubspace sub = GeneratedSubspace::build(mother, target);
      CHECK(sub.basis(1).same_node(mother));
      const auto cert =
          verify_membership(sub, {Scalar::rational(Rational(1)),
                                  Scalar::rational(Rational(-1)),
                                  Scalar::rational(Rational(2))});
      CHECK(cert.all_out);
      // Full rank up to 32 basis vectors for every catalog mother.
      CHECK(verify_independence(sub, 32, 1024).full_rank);
    }
  }
}
