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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqspace/construction.hpp"

namespace seqspace {

/// Finite stand-in for the dual unit ball of Y: the exact extreme points for
/// the sup and 1 norms, plus seeded random unit functionals.
struct FunctionalFamily {
  VectorSpaceSpec space;
  std::vector<std::vector<Rational>> extreme;
  std::vector<std::vector<Rational>> sampled;
  bool extreme_exhaustive = false;  // extreme list spans the whole dual ball
  uint64_t seed = 0;

  static FunctionalFamily for_space(const VectorSpaceSpec& y, uint32_t random_count = 32,
                                    uint64_t seed = 0);
  std::vector<std::vector<Rational>> all() const;
  std::string describe() const;
};

/// F^w(Y): Y-valued sequences whose image under every functional lies in the
/// scalar space F.
struct WeakSpec {
  SpaceSpec scalar_space;  // F (lp or c0 built-ins)
  VectorSpaceSpec y;

  std::string describe() const;
};

/// Out on a single witness functional; In by coordinate decomposition (every
/// coordinate sequence certifiably in F makes phi(x_j) a finite combination of
/// members for every phi); Inconclusive otherwise.
MembershipCertificate weak_membership_probe(const WeakSpec& ws, const Sequence& seq,
                                            const FunctionalFamily& fam,
                                            const ProbeOptions& opts = {});

struct WeakSupNorm {
  double value = 0.0;
  std::optional<Rational> exact;
  std::vector<Rational> attained_by;
  bool exact_over_ball = false;  // extreme points exhaust the truncated supremum
};

/// max over the family of ||(phi(x_j))_{j<=n}||_F; exact supremum over the
/// dual ball when the extreme-point list is exhaustive (the truncated objective
/// is convex in phi).
WeakSupNorm weak_sup_norm(const WeakSpec& ws, const Sequence& seq,
                          const FunctionalFamily& fam, uint64_t n);

/// phi o f compatible with F for every functional phi in the family.
MapPropertyReport check_strongly_compatible(const MapSpec& f, const WeakSpec& ws,
                                            const FunctionalFamily& fam,
                                            const std::vector<Sequence>& seqs,
                                            const std::vector<Rational>& alphas,
                                            const ProbeOptions& opts = {});

/// Weak-variant pipeline: the construction machinery with every family
/// membership check replaced by weak probes against (F_lambda)^w(Y).
GeneratedSubspace generate_weak(Sequence mother, SpaceSpec ambient, MapSpec f,
                                std::vector<SpaceSpec> scalar_family,
                                const FunctionalFamily& fam, const ProbeOptions& opts = {});

}  // namespace seqspace
