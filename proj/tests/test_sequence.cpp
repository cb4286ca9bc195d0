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

#include <array>
#include <random>
#include <thread>

#include "seqspace/maps.hpp"
#include "seqspace/sequence.hpp"

using namespace seqspace;

namespace {
const ScalarField kRat{};
Rational at(const Sequence& s, uint64_t j) { return s.eval(j).as_scalar().rat(); }
Sequence naturals() {
  return powlog_sequence(Rational(-1), Rational(0), Rational(1), kRat);  // x_j = j
}
bool agree(const Sequence& a, const Sequence& b, uint64_t upto) {
  for (uint64_t j = 1; j <= upto; ++j)
    if (!(a.eval(j) == b.eval(j))) return false;
  return true;
}
}  // namespace

TEST_CASE("evaluation is exact on closed forms") {
  CHECK(at(geometric_sequence(Rational(1, 2), kRat), 3) == Rational(1, 8));
  CHECK(at(zero_sequence(ValueSpace{kRat, std::nullopt}), 1'000'000) == Rational(0));
  CHECK(at(powlog_sequence(Rational(1), Rational(0), Rational(1), kRat), 5) ==
        Rational(1, 5));
  // Perfect roots stay exact: 4^(-1/2) = 1/2.
  CHECK(at(powlog_sequence(Rational(1, 2), Rational(0), Rational(1), kRat), 4) ==
        Rational(1, 2));
}

TEST_CASE("out-of-range references fail loudly instead of underflowing to zero") {
  // Integer exponents use the exact closed form and cannot underflow; the
  // log factor forces the dyadic route, which must refuse to round to 0.
  const Sequence steep = powlog_sequence(Rational(200), Rational(1), Rational(1), kRat);
  CHECK_THROWS_AS(steep.eval(1'000'000), SeqspaceError);
  CHECK(!steep.eval(2).is_zero());
  const Sequence exact_steep =
      powlog_sequence(Rational(200), Rational(0), Rational(1), kRat);
  CHECK(!exact_steep.eval(1'000'000).is_zero());
}

TEST_CASE("evaluation is repeatable") {
  const Sequence s = powlog_sequence(Rational(1, 2), Rational(1), Rational(1), kRat);
  for (uint64_t j : {1ull, 2ull, 17ull, 999ull})
    CHECK(s.eval(j) == s.eval(j));
}

TEST_CASE("zero-free version drops interleaved zeros") {
  const Sequence spread = embed_into(naturals(), IndexSet::odds());  // 1,0,2,0,3,0,...
  const Sequence zf = zero_free_version(spread);
  for (uint64_t k = 1; k <= 100; ++k) CHECK(at(zf, k) == Rational(static_cast<long>(k)));
}

TEST_CASE("finitely supported sequences have zero-free version 0") {
  const Sequence fin = explicit_sequence(
      {Value::scalar(Scalar::rational(Rational(1))), Value::scalar(Scalar::rational(Rational(1)))},
      ValueSpace{kRat, std::nullopt});
  const Sequence zf = zero_free_version(fin);
  for (uint64_t k = 1; k <= 20; ++k) CHECK(at(zf, k) == Rational(0));
}

TEST_CASE("zero-free version of a zero-free sequence is itself") {
  const Sequence x = powlog_sequence(Rational(1), Rational(2), Rational(1), kRat);
  const Sequence zf = zero_free_version(x);
  CHECK(zf.same_node(x));
  CHECK(agree(zf, x, 100));
}

TEST_CASE("zero-free version through a black-box map") {
  // clipped-linear sends 1 to 0, so the image of the harmonic sequence has a
  // single zero up front and no structural shortcut applies.
  const Sequence img = pushforward(MapSpec::clipped_linear(), harmonic_sequence(kRat));
  const Sequence zf = zero_free_version(img);
  CHECK(at(zf, 1) == Rational(1, 4));  // f(1/2) = (1/2)(1/2)
  CHECK(at(zf, 2) == Rational(2, 9));  // f(1/3) = (1/3)(2/3)
  // Idempotence on the generic path.
  CHECK(agree(zero_free_version(zf), zf, 50));
}

TEST_CASE("zero-free search signals budget exhaustion") {
  // clipped-linear kills every |t| >= 1, so the image of 2^j is identically 0
  // without the node knowing it.
  const Sequence img =
      pushforward(MapSpec::clipped_linear(), geometric_sequence(Rational(2), kRat));
  const Sequence zf = zero_free_version(img, 500);
  CHECK_THROWS_AS(zf.eval(1), BudgetExhausted);
}

TEST_CASE("restriction indexes through the set") {
  const Sequence odds_of_harmonic = restrict_to(harmonic_sequence(kRat), IndexSet::odds());
  for (uint64_t m = 1; m <= 50; ++m)
    CHECK(at(odds_of_harmonic, m) == Rational(1, static_cast<long>(2 * m - 1)));
}

TEST_CASE("restriction to a finite set gives finite support") {
  const Sequence s = restrict_to(naturals(), IndexSet::explicit_finite({2, 4}));
  CHECK(at(s, 1) == Rational(2));
  CHECK(at(s, 2) == Rational(4));
  CHECK(at(s, 3) == Rational(0));
  CHECK(s.support() == SupportHint::FiniteSupport);
}

TEST_CASE("generated values sit inside the declared envelope") {
  for (const auto& [a, b, c] :
       std::vector<std::array<const char*, 3>>{{"1/2", "1", "1"},
                                               {"1", "0", "3"},
                                               {"-1/2", "-1", "2"},
                                               {"0", "2", "1/4"}}) {
    const Sequence x = powlog_sequence(Rational::parse(a), Rational::parse(b),
                                       Rational::parse(c), kRat);
    REQUIRE(x.envelope().has_value());
    for (uint64_t j = 1; j <= 1000; ++j)
      CHECK(envelope_brackets(*x.envelope(),
                              std::fabs(x.eval(j).as_scalar().to_double()), j));
  }
}

TEST_CASE("envelope transports along progressions and rays") {
  // Including growing exponents and a negative-offset progression, where the
  // slope bounds differ on the two sides.
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"1/2", "1"}, {"-1/2", "-1"}, {"2", "-2"}}) {
    const Sequence x =
        powlog_sequence(Rational::parse(a), Rational::parse(b), Rational(1), kRat);
    for (const IndexSet& S : {IndexSet::odds(), IndexSet::dyadic_ray(3),
                              IndexSet::arithmetic(5, 2), IndexSet::arithmetic(3, -2)}) {
      const Sequence r = restrict_to(x, S);
      REQUIRE(r.envelope().has_value());
      CHECK(r.envelope()->a == x.envelope()->a);
      CHECK(r.envelope()->b == x.envelope()->b);
      for (uint64_t m = 1; m <= 1000; ++m) {
        const double mag = std::fabs(r.eval(m).as_scalar().to_double());
        CHECK(envelope_brackets(*r.envelope(), mag, m));
      }
    }
  }
}

TEST_CASE("embedding places coordinates on the set") {
  const Sequence e = embed_into(naturals(), IndexSet::evens());
  const Rational expect[12] = {Rational(0), Rational(1), Rational(0), Rational(2),
                               Rational(0), Rational(3), Rational(0), Rational(4),
                               Rational(0), Rational(5), Rational(0), Rational(6)};
  for (uint64_t j = 1; j <= 12; ++j) CHECK(at(e, j) == expect[j - 1]);
  CHECK(at(e, 7) == Rational(0));  // off the set
}

TEST_CASE("restrict after embed recovers the sequence") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<uint64_t> stride(1, 6);
  std::uniform_int_distribution<uint32_t> level(1, 6);
  const Sequence x = powlog_sequence(Rational(1, 3), Rational(1, 2), Rational(2), kRat);
  for (int iter = 0; iter < 8; ++iter) {
    const IndexSet S = iter % 2 == 0
                           ? IndexSet::arithmetic(stride(rng) + 1, 0)
                           : IndexSet::dyadic_ray(level(rng));
    CHECK(agree(restrict_to(embed_into(x, S), S), x, 1000));
  }
}

TEST_CASE("zero-free version of an embedding is the zero-free original") {
  const Sequence x = powlog_sequence(Rational(1), Rational(0), Rational(1), kRat);
  const Sequence zf = zero_free_version(embed_into(x, IndexSet::dyadic_ray(2)));
  CHECK(agree(zf, x, 200));
}

TEST_CASE("linear combinations") {
  const Sequence x = powlog_sequence(Rational(1), Rational(1), Rational(1), kRat);
  const Sequence y = geometric_sequence(Rational(1, 3), kRat);
  const Scalar one = Scalar::rational(Rational(1));
  const Scalar zero = Scalar::rational(Rational(0));

  // 1*x + 0*y = x
  CHECK(agree(linear_combine({{one, x}, {zero, y}}), x, 100));
  // x - x = 0
  const Sequence diff = linear_combine({{one, x}, {Scalar::rational(Rational(-1)), x}});
  for (uint64_t j = 1; j <= 100; ++j) CHECK(at(diff, j) == Rational(0));
  // 2 * 2^-j = 2^(1-j)
  const Sequence doubled =
      scale_sequence(Scalar::rational(Rational(2)), geometric_sequence(Rational(1, 2), kRat));
  for (uint64_t j = 1; j <= 60; ++j)
    CHECK(at(doubled, j) == Rational(2).pow_int(1 - static_cast<long>(j)));
}

TEST_CASE("mixed value kinds are rejected") {
  const Sequence scalar = harmonic_sequence(kRat);
  const Sequence vec = axis_sequence(scalar, 0, VectorSpaceSpec{2, std::nullopt});
  CHECK_THROWS_AS(linear_combine({{Scalar::rational(Rational(1)), scalar},
                                  {Scalar::rational(Rational(1)), vec}}),
                  MixedValueKinds);
}

TEST_CASE("splitting along a set") {
  const auto [u, v] = split_at(harmonic_sequence(kRat), IndexSet::odds());
  CHECK(at(u, 1) == Rational(1));
  CHECK(at(u, 2) == Rational(0));
  CHECK(at(u, 3) == Rational(1, 3));
  CHECK(at(v, 1) == Rational(0));
  CHECK(at(v, 2) == Rational(1, 2));
  // u + v = x and supports are disjoint.
  for (uint64_t j = 1; j <= 1000; ++j) {
    const Rational uj = at(u, j), vj = at(v, j);
    CHECK(uj + vj == Rational(1, static_cast<long>(j)));
    CHECK((uj.is_zero() || vj.is_zero()));
  }
}

TEST_CASE("splitting at the empty set is degenerate") {
  const Sequence x = harmonic_sequence(kRat);
  const auto [u, v] = split_at(x, IndexSet::explicit_finite({}));
  for (uint64_t j = 1; j <= 50; ++j) {
    CHECK(at(u, j) == Rational(0));
    CHECK(at(v, j) == at(x, j));
  }
}

TEST_CASE("split halves expose the zero-free structure") {
  const Sequence x = powlog_sequence(Rational(1), Rational(0), Rational(1), kRat);
  const auto [u, v] = split_at(x, IndexSet::odds());
  // u0 = (restrict(x, odds))0: both are the odd-position harmonic values.
  const Sequence u0 = zero_free_version(u);
  const Sequence r0 = zero_free_version(restrict_to(x, IndexSet::odds()));
  CHECK(agree(u0, r0, 300));
}

TEST_CASE("exact series sums from geometric structure") {
  CHECK(exact_series_sum(geometric_sequence(Rational(1, 2), kRat)) == Rational(1));
  const Sequence w = periodic_geometric_sequence(
      {Scalar::rational(Rational(1)), Scalar::rational(Rational(-1))}, Rational(1, 2), kRat);
  CHECK(exact_series_sum(w) == Rational(0));
  CHECK(exact_series_sum(restrict_to(w, IndexSet::odds())) == Rational(2));
  CHECK(exact_abs_sum_bound(w) == Rational(4));
  // No geometric structure, no exact sum.
  CHECK(!exact_series_sum(harmonic_sequence(kRat)).has_value());
}

TEST_CASE("shared sequences evaluate safely from several threads") {
  // The zero-free scan memoizes positions; concurrent evaluation of the same
  // node must agree with a fresh single-threaded recomputation.
  const Sequence img = pushforward(MapSpec::clipped_linear(), harmonic_sequence(kRat));
  const Sequence zf = zero_free_version(img);
  std::vector<std::vector<Rational>> results(4);
  {
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
      workers.emplace_back([&, t] {
        for (uint64_t k = 1; k <= 64; ++k)
          results[t].push_back(zf.eval(((t + k) % 64) + 1).as_scalar().rat());
      });
    for (auto& w : workers) w.join();
  }
  const Sequence fresh = zero_free_version(
      pushforward(MapSpec::clipped_linear(), harmonic_sequence(kRat)));
  for (int t = 0; t < 4; ++t)
    for (uint64_t k = 1; k <= 64; ++k)
      CHECK(results[t][k - 1] == fresh.eval(((t + k) % 64) + 1).as_scalar().rat());
}

TEST_CASE("functional images rewrite through bundles and embeddings") {
  const VectorSpaceSpec y{2, std::nullopt};
  const Sequence bundle = vector_bundle(
      {powlog_sequence(Rational(2), Rational(0), Rational(1), kRat),
       geometric_sequence(Rational(1, 2), kRat)},
      y);
  const std::vector<Rational> phi{Rational(2), Rational(3)};
  const Sequence img = functional_image(bundle, phi);
  for (uint64_t j = 1; j <= 50; ++j) {
    const Rational expect = Rational(2) / Rational(static_cast<long>(j * j)) +
                            Rational(3) * Rational(1, 2).pow_int(static_cast<long>(j));
    CHECK(at(img, j) == expect);
  }
  // Axis bundles keep the envelope visible through a single-coordinate
  // functional (after the combination folds).
  const Sequence axis = axis_sequence(
      powlog_sequence(Rational(1, 2), Rational(1), Rational(1), kRat), 0, y);
  const Sequence proj = functional_image(axis, {Rational(1), Rational(0)});
  CHECK(proj.envelope().has_value());
  // And it commutes with embedding.
  const Sequence through_embed =
      functional_image(embed_into(axis, IndexSet::evens()), {Rational(1), Rational(0)});
  const Sequence embed_after =
      embed_into(functional_image(axis, {Rational(1), Rational(0)}), IndexSet::evens());
  CHECK(agree(through_embed, embed_after, 500));
}
