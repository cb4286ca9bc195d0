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
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqspace/index_set.hpp"
#include "seqspace/scalar.hpp"

namespace seqspace {

inline constexpr uint64_t kDefaultZeroFreeBudget = 1'000'000;

/// Two-sided power-log bracket on coordinate magnitudes:
///   lo * k^-a * log(k+1)^-b  <=  |x_k|  <=  hi * k^-a * log(k+1)^-b
/// for every k >= 1 (norms instead of |.| for vector values).
///
/// The exponents are the exact content: membership in lp / c0 / l-infinity is
/// decided from (a, b) alone. The constants feed sampled bracket checks and
/// human reports.
struct PowLogEnvelope {
  Rational a;
  Rational b;
  Rational lo;
  Rational hi;

  /// k^-a * log(k+1)^-b in double precision.
  double reference(uint64_t k) const;
};

/// Envelope with constants multiplied by an exact factor (|alpha| scaling).
PowLogEnvelope envelope_scaled(const PowLogEnvelope& e, const Rational& factor);
/// Envelope of |x|^r values: exponents (r*a, r*b); constants outward-rounded.
PowLogEnvelope envelope_powered(const PowLogEnvelope& e, const Rational& r);
/// Envelope of the subsequence along {stride*m + offset}: same exponents,
/// constants rescaled by slope bounds (outward-rounded).
PowLogEnvelope envelope_restricted_ap(const PowLogEnvelope& e, uint64_t stride,
                                      int64_t offset);
/// Sampled bracket check at position k with magnitude |x_k|.
bool envelope_brackets(const PowLogEnvelope& e, double magnitude, uint64_t k,
                       double slack = 1e-9);

/// Eventually periodic-geometric structure: x_{j+period} = ratio * x_j for all
/// j >= start. Enables exact series sums and exact absolute tail bounds.
struct ExactTail {
  uint64_t start = 1;
  uint64_t period = 1;
  Rational ratio;
};

enum class SupportHint : uint8_t { Infinite, FiniteSupport, Unknown };

class SeqNode;

/// A countably infinite, 1-indexed, immutable sequence of scalar or vector
/// values. Value-semantics handle over a shared combinator node.
class Sequence {
 public:
  explicit Sequence(std::shared_ptr<const SeqNode> node) : node_(std::move(node)) {}

  Value eval(uint64_t j) const;
  const ValueSpace& values() const;
  const std::optional<PowLogEnvelope>& envelope() const;
  SupportHint support() const;
  std::optional<uint64_t> support_bound() const;
  const std::optional<ExactTail>& exact_tail() const;
  std::optional<Scalar> constant_value() const;
  std::string describe() const;

  const SeqNode* node() const { return node_.get(); }
  std::shared_ptr<const SeqNode> share() const { return node_; }
  bool same_node(const Sequence& o) const { return node_.get() == o.node_.get(); }

 private:
  std::shared_ptr<const SeqNode> node_;
};

// ---- constructors -----------------------------------------------------------

Sequence zero_sequence(ValueSpace vs);
/// Finitely many explicit values, zero tail.
Sequence explicit_sequence(std::vector<Value> values, ValueSpace vs);
/// e_{j0}: scalar 1 at position j0, zero elsewhere.
Sequence unit_coordinate_sequence(uint64_t j0, ScalarField field);
/// x_{(m-1)P + r} = block[r] * ratio^(m-1); covers geometric sequences (P = 1)
/// and sign-alternating interleaves.
Sequence periodic_geometric_sequence(std::vector<Scalar> block, Rational ratio,
                                     ScalarField field);
/// x_j = scale * ratio^j.
Sequence geometric_sequence(Rational ratio, ScalarField field, Rational scale = Rational(1));
/// x_j = c * j^-a * log(j+1)^-b. Exact rational values where the closed form is
/// rational (integer a with b = 0, perfect roots); a deterministic dyadic
/// approximation otherwise, bracketed by the declared envelope.
Sequence powlog_sequence(Rational a, Rational b, Rational c, ScalarField field);
Sequence harmonic_sequence(ScalarField field);
/// Vector-valued sequence from d scalar coordinate sequences.
Sequence vector_bundle(std::vector<Sequence> coords, VectorSpaceSpec vspec);
/// scalar_seq * e_axis (axis is 0-based).
Sequence axis_sequence(const Sequence& scalar_seq, uint32_t axis, VectorSpaceSpec vspec);

// ---- operations -------------------------------------------------------------

/// x_j; pure and repeatable.
Value eval(const Sequence& s, uint64_t j);
Scalar eval_scalar(const Sequence& s, uint64_t j);

/// The subsequence of nonzero coordinates in order; the zero sequence when the
/// support is declared finite. The budget bounds the per-call coordinate scan;
/// exceeding it raises BudgetExhausted.
Sequence zero_free_version(const Sequence& s, uint64_t budget = kDefaultZeroFreeBudget);

/// Position m holds x_{enumerate(S, m)}. Finite S yields a finite-support
/// result. Envelopes transport along arithmetic progressions and dyadic rays.
Sequence restrict_to(const Sequence& s, const IndexSet& S);

/// Coordinate enumerate(S, k) holds x_k, all other coordinates zero.
Sequence embed_into(const Sequence& s, const IndexSet& S);

/// Coordinatewise a1*x + ... + ak*y over a finite term list.
Sequence linear_combine(const std::vector<std::pair<Scalar, Sequence>>& terms);
Sequence scale_sequence(const Scalar& a, const Sequence& s);

/// (u, v) with u = x on S and 0 off S, v = x - u.
std::pair<Sequence, Sequence> split_at(const Sequence& s, const IndexSet& S);

/// Scalar sequence j -> sum_i phi[i] * x_j[i] for a vector-valued sequence.
/// Rewrites through embed/restrict/combinations to keep symbolic structure.
Sequence functional_image(const Sequence& vector_seq, const std::vector<Rational>& phi);

/// Coordinatewise image under a pure value map with f(0) = 0. The caller
/// supplies the output value space, the transported envelope (if any) and
/// whether f(x) = 0 exactly when x = 0 (so support hints survive).
Sequence map_sequence(std::function<Value(const Value&)> f, const Sequence& inner,
                      ValueSpace out_space, std::optional<PowLogEnvelope> env,
                      bool preserves_support, std::string label);

/// Coordinate sequences of a vector bundle, when the sequence is one.
std::optional<std::vector<Sequence>> bundle_coordinates(const Sequence& s);

/// Exact sum of all coordinates for rational scalar sequences with an exact
/// tail of ratio |rho| < 1 (absolutely convergent by construction).
std::optional<Rational> exact_series_sum(const Sequence& s);
/// Exact upper bound on sum of |x_j| under the same conditions.
std::optional<Rational> exact_abs_sum_bound(const Sequence& s);

}  // namespace seqspace
