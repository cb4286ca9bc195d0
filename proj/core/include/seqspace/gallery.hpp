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

#pragma once

#include <string>
#include <vector>

#include "seqspace/construction.hpp"

namespace seqspace {

struct RegressionReport {
  std::string name;
  bool passed = false;
  std::vector<std::string> findings;
};

/// The witness sequence (1, -1, 1/2, -1/2, 1/4, -1/4, ...).
Sequence kernel_witness(ScalarField field = {});

/// The kernel space E = {x in l1 : sum x_j = 0} is invariant but not strongly
/// invariant: the witness lies in E, its odd-position subsequence (geometric,
/// functional value exactly 2) does not, and e_1 shows c00 is not contained.
RegressionReport kernel_space_counterexample();

/// Finite-dimensional demos: the plane-plus-point set in K^3 that is
/// (1,2)-lineable but carries no subspace through the extra point, and the
/// functional-neighborhood set where scaling escapes every candidate subspace.
RegressionReport finite_dim_pointwise_failure();

/// Envelope-backed mothers certified in lp and out of every lq for q in gamma;
/// the primary entry is powlog(a = 1/p, b = 2/p). Throws EmptyCatalog when
/// gamma reaches p or beyond (those probes would make the set empty).
std::vector<Sequence> mother_vector_catalog(const Rational& p,
                                            const std::vector<Rational>& gamma,
                                            ScalarField field = {});

/// A fixed corpus of 20 envelope-backed sequences whose constants are chosen so
/// that, against lq for q in {1/2, 1, 2, inf} with the default probe budget and
/// threshold, every clearly divergent case (qa <= 9/10) crosses the threshold
/// and every convergent case stays below it.
std::vector<Sequence> envelope_corpus(ScalarField field = {});

}  // namespace seqspace
