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

#include <benchmark/benchmark.h>

#include "seqspace/construction.hpp"
#include "seqspace/gallery.hpp"

namespace {

using namespace seqspace;

const ScalarField kRat{};
const ScalarField kFlt{ScalarMode::RealFloat, 1e-12};

void BM_PartialNormRational(benchmark::State& state) {
  const Sequence h = harmonic_sequence(kRat);
  const SpaceSpec l1 = SpaceSpec::lp(Rational(1));
  for (auto _ : state) {
    auto pn = partial_norm(l1, h, state.range(0));
    benchmark::DoNotOptimize(pn.value);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PartialNormRational)->Range(64, 4096)->Complexity();

void BM_PartialNormFloat(benchmark::State& state) {
  const Sequence h = harmonic_sequence(kFlt);
  const SpaceSpec l1 = SpaceSpec::lp(Rational(1));
  for (auto _ : state) {
    auto pn = partial_norm(l1, h, state.range(0));
    benchmark::DoNotOptimize(pn.value);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PartialNormFloat)->Range(64, 4096)->Complexity();

void BM_SymbolicMembership(benchmark::State& state) {
  const Sequence mother =
      powlog_sequence(Rational(1, 2), Rational(1), Rational(1), kRat);
  const SpaceSpec l1 = SpaceSpec::lp(Rational(1));
  for (auto _ : state) {
    auto cert = decide_membership_symbolic(l1, mother);
    benchmark::DoNotOptimize(cert.verdict);
  }
}
BENCHMARK(BM_SymbolicMembership);

GeneratedSubspace make_pipeline() {
  const Rational p(2);
  return GeneratedSubspace::build(
      powlog_sequence(p.reciprocal(), Rational(1), Rational(1), kRat),
      TargetSpec{SpaceSpec::lp(p), MapSpec::identity(),
                 NestedFamily({SpaceSpec::lp(Rational(1)), SpaceSpec::lp(Rational(3, 2))})});
}

void BM_VerifyMembership(benchmark::State& state) {
  const GeneratedSubspace sub = make_pipeline();
  const std::vector<Scalar> coeffs = {
      Scalar::rational(Rational(1)), Scalar::rational(Rational(0)),
      Scalar::rational(Rational(-2)), Scalar::rational(Rational(1, 2))};
  for (auto _ : state) {
    auto cert = verify_membership(sub, coeffs);
    benchmark::DoNotOptimize(cert.all_out);
  }
}
BENCHMARK(BM_VerifyMembership);

void BM_IndependenceRank(benchmark::State& state) {
  const GeneratedSubspace sub = make_pipeline();
  for (auto _ : state) {
    auto r = verify_independence(sub, static_cast<uint32_t>(state.range(0)), 2048);
    benchmark::DoNotOptimize(r.rank);
  }
}
BENCHMARK(BM_IndependenceRank)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_CombineClosedForm(benchmark::State& state) {
  const GeneratedSubspace sub = make_pipeline();
  const auto [lazy, closed] =
      combine(sub, {Scalar::rational(Rational(1)), Scalar::rational(Rational(2))});
  uint64_t r = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed.coordinate(r));
    r = r % 4096 + 1;
  }
}
BENCHMARK(BM_CombineClosedForm);

void BM_PartitionLocate(benchmark::State& state) {
  const IndexPartition part = IndexPartition::from_half(HalfChoice::Odds);
  uint64_t j = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(part.locate(j));
    j = j % 100'000 + 1;
  }
}
BENCHMARK(BM_PartitionLocate);

}  // namespace

BENCHMARK_MAIN();
