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
#include <utility>
#include <vector>

#include "seqspace/spaces.hpp"

namespace seqspace {

/// A function f: X -> Y with f(0) = 0, applied coordinatewise to sequences.
///
/// Kinds:
///   identity
///   power(r), r > 0:    t -> sign(t) |t|^r   (componentwise on vectors;
///                       z |z|^(r-1) for complex scalars)
///   clipped-linear:     t -> t * max(0, 1 - |t|)
///   user-table:         finite sample table plus a symbolic tag
class MapSpec {
 public:
  enum class Kind : uint8_t { Identity, Power, ClippedLinear, UserTable };

  static MapSpec identity(ValueSpace domain = {});
  static MapSpec power(Rational r, ValueSpace domain = {});
  static MapSpec clipped_linear(ValueSpace domain = {});
  static MapSpec user_table(std::vector<std::pair<Value, Value>> table, std::string tag,
                            ValueSpace domain = {});

  Kind kind() const { return kind_; }
  const Rational& power_exponent() const;
  const ValueSpace& domain() const { return domain_; }
  std::string describe() const;

  Value apply(const Value& v) const;
  Scalar apply_scalar(const Scalar& s) const;

 private:
  MapSpec() = default;
  Kind kind_ = Kind::Identity;
  Rational r_;
  std::vector<std::pair<Value, Value>> table_;
  std::string tag_;
  ValueSpace domain_;
};

enum class PropertyVerdict : uint8_t { ProvenSymbolic, HoldsOnSamples, Refuted };
std::string to_string(PropertyVerdict v);

struct MapWitness {
  Rational alpha;
  Value x;
  std::optional<std::vector<Rational>> functional;
  std::string note;
};

struct MapPropertyReport {
  std::string property;
  std::string map;
  PropertyVerdict verdict = PropertyVerdict::HoldsOnSamples;
  std::string detail;  // e.g. the K(alpha) law
  std::vector<MapWitness> witnesses;
  std::vector<std::pair<std::string, std::string>> facts;
  bool holds() const { return verdict != PropertyVerdict::Refuted; }
};

/// Coordinatewise image (f(x_j))_j. Identity returns the sequence unchanged;
/// power maps transport the envelope to (r*a, r*b) with constants raised to r.
Sequence pushforward(const MapSpec& f, const Sequence& seq);

/// ||f(alpha x)|| >= K(alpha) ||f(x)||. Identity and power maps are proven with
/// K(alpha) = |alpha|^r and the law is verified to exact equality on the grid
/// (rational mode); other kinds are sampled, with refutation witnesses when a
/// nonzero image collapses to zero.
MapPropertyReport check_non_contractive(const MapSpec& f, const std::vector<Rational>& alphas,
                                        const std::vector<Value>& xs);

/// |phi(f(alpha x))| >= K(alpha) |phi(f(x))| for all functionals phi.
MapPropertyReport check_strongly_non_contractive(const MapSpec& f,
                                                 const std::vector<Rational>& alphas,
                                                 const std::vector<Value>& xs,
                                                 const std::vector<std::vector<Rational>>& functionals);

/// (f(x_j)) not in E implies (f(alpha x_j)) not in E. Power and identity maps
/// are proven against lp/c0 targets (the pushforward envelope exponents do not
/// depend on alpha); black-box maps are checked by contrapositive sampling.
MapPropertyReport check_compatible(const MapSpec& f, const SpaceSpec& space,
                                   const std::vector<Sequence>& seqs,
                                   const std::vector<Rational>& alphas,
                                   const ProbeOptions& opts = {});

/// Default alpha grid {+-2^k : -3 <= k <= 3}.
std::vector<Rational> default_alpha_grid();

}  // namespace seqspace
