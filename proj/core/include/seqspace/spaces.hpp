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

#include "seqspace/sequence.hpp"

namespace seqspace {

/// Weights of the defining functional of a kernel space inside l1.
struct KernelWeights {
  enum class Kind : uint8_t { Ones, Geometric, Explicit };
  Kind kind = Kind::Ones;
  Rational ratio;                 // Geometric: w_j = ratio^(j-1)
  std::vector<Rational> values;   // Explicit: zero beyond the list
  std::string describe() const;
};

/// A sequence-space description with norm and membership semantics.
///
/// lp for p in (0, inf], c0, c, c00, and the kernel-of-functional subspace of
/// l1 (x in l1 with sum w_j x_j = 0). lp with p >= 1, c0 and c are Banach;
/// lp with 0 < p < 1 is quasi-Banach with quasi-exponent s = p.
class SpaceSpec {
 public:
  enum class Kind : uint8_t { Lp, C0, C, C00, KernelFunctional };

  static SpaceSpec lp(Rational p);
  static SpaceSpec lp_infinity();
  static SpaceSpec c0();
  static SpaceSpec c();
  static SpaceSpec c00();
  static SpaceSpec kernel(KernelWeights w = {});

  Kind kind() const { return kind_; }
  bool is_lp() const { return kind_ == Kind::Lp; }
  bool infinite_p() const { return kind_ == Kind::Lp && !p_.has_value(); }
  const Rational& p() const;
  const KernelWeights& weights() const { return weights_; }

  /// s = min(p, 1) for lp, 1 otherwise.
  Rational quasi_exponent() const;
  bool banach() const { return quasi_exponent() == Rational(1); }

  /// Norm aggregation is a running max rather than a power sum.
  bool sup_like() const;

  std::string describe() const;

 private:
  SpaceSpec() = default;
  Kind kind_ = Kind::Lp;
  std::optional<Rational> p_ = Rational(2);  // nullopt = infinity (Lp only)
  KernelWeights weights_;
};

/// Members ordered by declared inclusion (ascending). Built-in members only
/// (lp and c0), with the known order: lp by exponent, then c0, then l-infinity.
class NestedFamily {
 public:
  explicit NestedFamily(std::vector<SpaceSpec> members);
  const std::vector<SpaceSpec>& members() const { return members_; }
  const SpaceSpec& largest() const { return members_.back(); }
  std::string describe() const;

 private:
  std::vector<SpaceSpec> members_;
};

enum class Verdict : uint8_t { In, Out, Inconclusive };
enum class CertMethod : uint8_t { SymbolicPowLog, PartialNormProbe, FunctionalEvaluation };

std::string to_string(Verdict v);
std::string to_string(CertMethod m);

/// Membership verdict plus the evidence that produced it.
struct MembershipCertificate {
  Verdict verdict = Verdict::Inconclusive;
  CertMethod method = CertMethod::PartialNormProbe;
  std::string space;
  std::string sequence;
  std::string rule;  // one-line decision record
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<std::pair<uint64_t, double>> trace;  // (n, partial norm / partial sum)
  std::optional<Rational> exact_value;             // functional sum, where exact
};

struct ProbeOptions {
  uint64_t budget = 100'000;    // coordinates scanned
  double threshold = 1'000.0;   // divergence threshold, norm units
  uint64_t truncation = 1'000;  // prefix length for coordinatewise checks
  double tolerance = 1e-9;      // stabilization tolerance for functional probes
};

/// Truncated norm: (sum_{j<=n} ||x_j||^p)^(1/p) for lp (max for p = inf),
/// max_{j<=n} ||x_j|| for c0/c/c00 and the l1 norm for kernel spaces.
struct PartialNorm {
  double value = 0.0;
  bool sup_like = false;
  std::optional<Rational> p;            // finite lp exponent
  std::optional<Rational> exact_sum;    // sum ||x_j||^p, exact when available
  std::optional<Rational> exact_max;    // sup-like exact max

  /// Exact rational value of the norm itself, when representable.
  std::optional<Rational> exact_norm() const;
  /// norm > t, decided exactly when exact data is present.
  bool exceeds(const Rational& t) const;
};

PartialNorm partial_norm(const SpaceSpec& space, const Sequence& seq, uint64_t n);

/// All prefixes 1..n in one pass (for monotonicity checks and CSV traces).
std::vector<std::pair<uint64_t, double>> partial_norm_trace(const SpaceSpec& space,
                                                            const Sequence& seq,
                                                            uint64_t n);

/// Exact verdict from the power-log envelope. Supported spaces: lp (finite or
/// infinite exponent) and c0; anything else raises UnsupportedSpace. Raises
/// UnsupportedSpace as well when the sequence carries no envelope.
///
/// Rule: sum k^(-qa) log^(-qb) converges iff qa > 1, or qa = 1 and qb > 1;
/// c0: in iff a > 0 or (a = 0 and b > 0); l-infinity: a > 0 or (a = 0, b >= 0).
MembershipCertificate decide_membership_symbolic(const SpaceSpec& space,
                                                 const Sequence& seq);

/// Threshold-based evidence for black-box sequences. Out when the partial norm
/// exceeds the threshold within budget; In is never produced by norm probing
/// alone. Kernel spaces evaluate partial functional sums, with exact verdicts
/// when the series structure allows exact summation.
MembershipCertificate probe_membership_numeric(const SpaceSpec& space, const Sequence& seq,
                                               const ProbeOptions& opts = {});

/// Structural-first decision: finite support, envelope rules and exact
/// functional evaluation before falling back to the numeric probe.
MembershipCertificate decide_membership(const SpaceSpec& space, const Sequence& seq,
                                        const ProbeOptions& opts = {});

/// Per-sample record for the invariant-space axioms.
struct InvariantAxiomReport {
  struct Sample {
    std::string sequence;
    bool b2_holds = false;              // ||x_j|| <= ||x|| for j <= n
    Verdict x_verdict = Verdict::Inconclusive;
    Verdict x0_verdict = Verdict::Inconclusive;
    bool verdicts_agree = true;         // where both decidable
    bool matched_norm_equal = false;    // ||x||(n') == ||x0||(m), matched truncation
    double ratio = 1.0;                 // ||x|| / ||x0|| at truncation
  };
  std::vector<Sample> samples;
  double K_estimate = 1.0;  // max ratio over samples
  bool builtin_K_is_one = false;
  bool passed = false;
  std::string notes;
};

InvariantAxiomReport check_invariant_axioms(const SpaceSpec& space,
                                            const std::vector<Sequence>& samples,
                                            uint64_t n, const ProbeOptions& opts = {});

/// Subsequence-closure and c00-containment checks.
struct StrongInvarianceReport {
  struct Violation {
    std::string sample;
    std::string pattern;  // empty for c00 probes
    std::string reason;
    std::optional<Rational> functional_value;
  };
  std::vector<Violation> violations;
  bool c00_contained = true;
  uint64_t checked_pairs = 0;
  bool passed = false;
};

StrongInvarianceReport check_strongly_invariant(const SpaceSpec& space,
                                                const std::vector<Sequence>& samples,
                                                const std::vector<IndexSet>& patterns,
                                                uint64_t n, const ProbeOptions& opts = {});

}  // namespace seqspace
