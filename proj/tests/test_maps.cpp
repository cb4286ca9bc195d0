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
#include "seqspace/maps.hpp"

using namespace seqspace;

namespace {
const ScalarField kRat{};
Rational at(const Sequence& s, uint64_t j) { return s.eval(j).as_scalar().rat(); }
Value rv(long num, long den = 1) { return Value::scalar(Scalar::rational(Rational(num, den))); }
}  // namespace

TEST_CASE("every map fixes the origin") {
  for (const MapSpec& f : {MapSpec::identity(), MapSpec::power(Rational(1, 2)),
                           MapSpec::power(Rational(3)), MapSpec::clipped_linear()})
    CHECK(f.apply(rv(0)).is_zero());
  // Tables must list 0 -> 0.
  CHECK_THROWS(MapSpec::user_table({{rv(0), rv(1)}}, "bad"));
  const MapSpec t = MapSpec::user_table({{rv(0), rv(0)}, {rv(1), rv(2)}}, "doubling");
  CHECK(t.apply(rv(1)) == rv(2));
  CHECK_THROWS(MapSpec::power(Rational(0)));
}

TEST_CASE("power maps evaluate exactly on perfect roots") {
  const MapSpec sqrt = MapSpec::power(Rational(1, 2));
  CHECK(sqrt.apply(rv(4)) == rv(2));
  CHECK(sqrt.apply(rv(-9, 4)) == rv(-3, 2));
  const MapSpec cube = MapSpec::power(Rational(3));
  CHECK(cube.apply(rv(-2, 3)) == rv(-8, 27));
}

TEST_CASE("clipped-linear evaluates exactly") {
  const MapSpec f = MapSpec::clipped_linear();
  CHECK(f.apply(rv(1)).is_zero());         // 1 * max(0, 0)
  CHECK(f.apply(rv(1, 2)) == rv(1, 4));    // (1/2)(1/2)
  CHECK(f.apply(rv(-1, 2)) == rv(-1, 4));
  CHECK(f.apply(rv(3)).is_zero());
}

TEST_CASE("identity pushforward returns the same sequence") {
  const Sequence x = harmonic_sequence(kRat);
  CHECK(pushforward(MapSpec::identity(), x).same_node(x));
}

TEST_CASE("power pushforward squares the envelope") {
  const Sequence x = powlog_sequence(Rational(1), Rational(0), Rational(1), kRat);
  const Sequence y = pushforward(MapSpec::power(Rational(2)), x);
  REQUIRE(y.envelope().has_value());
  CHECK(y.envelope()->a == Rational(2));
  CHECK(y.envelope()->b == Rational(0));
  for (uint64_t j = 1; j <= 1000; ++j) {
    CHECK(at(y, j) == at(x, j) * at(x, j));
    CHECK(envelope_brackets(*y.envelope(), std::fabs(at(y, j).to_double()), j));
  }
}

TEST_CASE("power maps preserve zero coordinates") {
  const Sequence spread = embed_into(harmonic_sequence(kRat), IndexSet::evens());
  const Sequence img = pushforward(MapSpec::power(Rational(1, 2)), spread);
  for (uint64_t j = 1; j <= 50; j += 2) CHECK(at(img, j).is_zero());
  CHECK(img.support() == spread.support());
}

TEST_CASE("restriction commutes with power pushforwards") {
  const MapSpec f = MapSpec::power(Rational(3));
  const Sequence x = powlog_sequence(Rational(1, 2), Rational(1), Rational(2), kRat);
  for (const IndexSet& S : {IndexSet::odds(), IndexSet::dyadic_ray(2)}) {
    const Sequence a = restrict_to(pushforward(f, x), S);
    const Sequence b = pushforward(f, restrict_to(x, S));
    for (uint64_t m = 1; m <= 1000; ++m) CHECK(a.eval(m) == b.eval(m));
  }
}

TEST_CASE("identity and power maps are proven non-contractive") {
  const std::vector<Value> xs = {rv(1), rv(-1, 2), rv(4), rv(9, 16), rv(0)};
  for (const auto& r : {Rational(1, 2), Rational(2), Rational(3)}) {
    const auto report = check_non_contractive(MapSpec::power(r), default_alpha_grid(), xs);
    CHECK(report.verdict == PropertyVerdict::ProvenSymbolic);
    CHECK(report.detail.find("|alpha|^" + r.str()) != std::string::npos);
    REQUIRE(!report.facts.empty());
    CHECK(report.facts[0].second == "true");  // exact equality on the grid
  }
  const auto id = check_non_contractive(MapSpec::identity(), default_alpha_grid(), xs);
  CHECK(id.verdict == PropertyVerdict::ProvenSymbolic);
}

TEST_CASE("clipped-linear is refuted as non-contractive") {
  const auto report = check_non_contractive(MapSpec::clipped_linear(),
                                            {Rational(2)}, {rv(1, 2)});
  CHECK(report.verdict == PropertyVerdict::Refuted);
  REQUIRE(!report.witnesses.empty());
  CHECK(report.witnesses[0].alpha == Rational(2));
  // f(1/2) = 1/4 but f(1) = 0: no K(2) > 0 can work.
  CHECK(report.witnesses[0].note.find("1/4") != std::string::npos);
}

TEST_CASE("strong non-contractivity over a functional grid") {
  const std::vector<std::vector<Rational>> functionals = {
      {Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(1), Rational(-1)}};
  const std::vector<Value> xs = {
      Value::vector({Scalar::rational(Rational(1)), Scalar::rational(Rational(-4))}),
      Value::vector({Scalar::rational(Rational(1, 4)), Scalar::rational(Rational(9))})};
  const auto power = check_strongly_non_contractive(MapSpec::power(Rational(2)),
                                                    default_alpha_grid(), xs, functionals);
  CHECK(power.verdict == PropertyVerdict::ProvenSymbolic);

  const std::vector<Value> clip_xs = {
      Value::vector({Scalar::rational(Rational(1, 2)), Scalar::rational(Rational(0))})};
  const auto clip = check_strongly_non_contractive(MapSpec::clipped_linear(), {Rational(2)},
                                                   clip_xs, functionals);
  CHECK(clip.verdict == PropertyVerdict::Refuted);
  REQUIRE(!clip.witnesses.empty());
  CHECK(clip.witnesses[0].functional.has_value());
}

TEST_CASE("identity on scalars is strongly non-contractive") {
  const auto report = check_strongly_non_contractive(
      MapSpec::identity(), default_alpha_grid(), {rv(1), rv(-3, 7)}, {{Rational(2)}});
  CHECK(report.verdict == PropertyVerdict::ProvenSymbolic);
}

TEST_CASE("power maps are proven compatible with lp and c0") {
  const std::vector<Sequence> seqs = {
      powlog_sequence(Rational(1, 2), Rational(1), Rational(1), kRat),
      powlog_sequence(Rational(2), Rational(0), Rational(3), kRat)};
  for (const auto& space : {SpaceSpec::lp(Rational(1)), SpaceSpec::lp(Rational(1, 2)),
                            SpaceSpec::c0()}) {
    const auto report = check_compatible(MapSpec::power(Rational(1, 2)), space, seqs,
                                         default_alpha_grid());
    CHECK(report.verdict == PropertyVerdict::ProvenSymbolic);
  }
  // The non-contractive identity is compatible with every lq.
  const auto id =
      check_compatible(MapSpec::identity(), SpaceSpec::lp(Rational(2)), seqs,
                       default_alpha_grid());
  CHECK(id.verdict == PropertyVerdict::ProvenSymbolic);
}

TEST_CASE("alpha = 1 never refutes compatibility") {
  const std::vector<Sequence> seqs = {harmonic_sequence(kRat)};
  const auto report = check_compatible(MapSpec::clipped_linear(), SpaceSpec::c0(), seqs,
                                       {Rational(1)});
  CHECK(report.verdict != PropertyVerdict::Refuted);
}

TEST_CASE("clipped-linear is incompatible with c0") {
  // f(const 1/2) = const 1/4 escapes c0, but f(2 * const 1/2) = f(1) = 0 lies
  // inside: the alpha-scaling re-enters the space.
  const Sequence half = powlog_sequence(Rational(0), Rational(0), Rational(1, 2), kRat);
  const auto report = check_compatible(MapSpec::clipped_linear(), SpaceSpec::c0(), {half},
                                       {Rational(2)});
  CHECK(report.verdict == PropertyVerdict::Refuted);
  REQUIRE(!report.witnesses.empty());
  CHECK(report.witnesses[0].alpha == Rational(2));
}

TEST_CASE("proven non-contractive maps are never refuted as compatible") {
  const std::vector<Rational> alphas = {Rational(2), Rational(-1, 2), Rational(3)};
  for (const auto& r : {Rational(1, 2), Rational(2), Rational(3)}) {
    const MapSpec f = MapSpec::power(r);
    for (const auto& space : {SpaceSpec::lp(Rational(1, 2)), SpaceSpec::lp(Rational(1)),
                              SpaceSpec::lp(Rational(2)), SpaceSpec::c0()}) {
      const auto report = check_compatible(f, space, envelope_corpus(), alphas);
      CHECK(report.verdict != PropertyVerdict::Refuted);
    }
  }
}
