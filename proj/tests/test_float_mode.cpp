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

#include "seqspace/construction.hpp"

using namespace seqspace;

namespace {
const ScalarField kFlt{ScalarMode::RealFloat, 1e-12};
const ScalarField kCpx{ScalarMode::ComplexFloat, 1e-12};
}  // namespace

TEST_CASE("float-mode sequences evaluate and keep their envelopes") {
  const Sequence x = powlog_sequence(Rational(1), Rational(0), Rational(1), kFlt);
  CHECK(x.eval(5).as_scalar().to_double() == doctest::Approx(0.2));
  REQUIRE(x.envelope().has_value());
  // Symbolic decisions only read the exponents, so they work in float mode too.
  CHECK(decide_membership_symbolic(SpaceSpec::lp(Rational(1)), x).verdict == Verdict::Out);
  CHECK(decide_membership_symbolic(SpaceSpec::lp(Rational(2)), x).verdict == Verdict::In);
}

TEST_CASE("float-mode probes carry the declared epsilon semantics") {
  ProbeOptions opts;
  opts.threshold = 10.0;
  const auto cert = probe_membership_numeric(SpaceSpec::lp(Rational(1)),
                                             harmonic_sequence(kFlt), opts);
  CHECK(cert.verdict == Verdict::Out);
}

TEST_CASE("the float pipeline mirrors the rational one structurally") {
  TargetSpec target{SpaceSpec::lp(Rational(2)), MapSpec::identity(),
                    NestedFamily({SpaceSpec::lp(Rational(1))})};
  const Sequence mother = powlog_sequence(Rational(1, 2), Rational(1), Rational(1), kFlt);
  const GeneratedSubspace sub = GeneratedSubspace::build(mother, target);
  CHECK(sub.partition().block(1).describe() == "odds");

  // Dual representation agrees bitwise: both paths apply the same two
  // floating-point operations in the same order.
  const std::vector<Scalar> coeffs = {Scalar::real(1.0), Scalar::real(-0.5),
                                      Scalar::real(2.0)};
  const auto [lazy, closed] = combine(sub, coeffs);
  for (uint64_t r = 1; r <= 500; ++r)
    CHECK(lazy.eval(r).as_scalar().to_double() ==
          closed.coordinate(r).as_scalar().to_double());

  const auto cert = verify_membership(sub, coeffs);
  CHECK(cert.all_out);
}

TEST_CASE("complex mode evaluates with modulus-based magnitudes") {
  const Sequence x = geometric_sequence(Rational(1, 2), kCpx);
  const Value v = x.eval(2);
  CHECK(v.as_scalar().mode() == ScalarMode::ComplexFloat);
  CHECK(v.as_scalar().magnitude().to_double() == doctest::Approx(0.25));
  // Norm accumulation uses |.|, so partial norms are real.
  const auto pn = partial_norm(SpaceSpec::lp(Rational(1)), x, 10);
  CHECK(pn.value == doctest::Approx(1023.0 / 1024.0));

  // The power map z |z|^(r-1) keeps complex arguments.
  const MapSpec f = MapSpec::power(Rational(2));
  const Scalar z = Scalar::complex({0.0, 2.0});
  const Scalar fz = f.apply_scalar(z);
  CHECK(fz.flt().real() == doctest::Approx(0.0));
  CHECK(fz.flt().imag() == doctest::Approx(4.0));
}

TEST_CASE("rational and float modes do not mix") {
  const Sequence r = harmonic_sequence(ScalarField{});
  const Sequence f = harmonic_sequence(kFlt);
  CHECK_THROWS_AS(linear_combine({{Scalar::rational(Rational(1)), r},
                                  {Scalar::real(1.0), f}}),
                  MixedValueKinds);
}
