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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqspace/maps.hpp"
#include "seqspace/spaces.hpp"

namespace seqspace {

/// The triple (E, f, (E_lambda)) describing the target set
///   G = { x in E : (f(x_j))_j outside every family member }.
struct TargetSpec {
  SpaceSpec ambient;    // E
  MapSpec map;          // f
  NestedFamily family;  // nested strongly invariant members

  std::string describe() const;
};

/// A pluggable membership decider for one family member; the strong pipeline
/// wires decide_membership, the weak pipeline wires functional probes.
struct MemberDecider {
  std::string name;
  std::function<MembershipCertificate(const Sequence&)> decide;
};

enum class HalfChoice : uint8_t { Odds, Evens };

/// Dyadic decomposition of N anchored at the chosen half:
///   half = odds:  block(1) = odds,  block(i) = ray(i) for i >= 2
///   half = evens: block(1) = evens, block(i) = image of ray(i-1) under the
///                 enumeration of the odds (2r - 1)
/// Blocks are pairwise disjoint, infinite, and cover N.
class IndexPartition {
 public:
  static IndexPartition from_half(HalfChoice half);
  HalfChoice half() const { return half_; }
  IndexSet block(uint32_t i) const;
  /// Block index and rank within the block; every j lies in exactly one block.
  std::pair<uint32_t, uint64_t> locate(uint64_t j) const;
  std::string describe() const;

 private:
  explicit IndexPartition(HalfChoice h) : half_(h) {}
  HalfChoice half_;
};

/// Half-selection dichotomy: whichever of the odd or even subsequence of
/// (f(x_j))_j escapes the whole family is returned with its Out certificate.
/// Throws NotAdmissible if f(x) itself does not escape the family and
/// InconclusiveSplit if neither half is certifiably out at budget.
std::pair<IndexSet, MembershipCertificate> select_divergent_half(
    const Sequence& x, const TargetSpec& target, const ProbeOptions& opts = {});

IndexPartition build_partition(const IndexSet& half);

/// The subspace through the mother vector: basis y_1 = x, y_i = x embedded
/// into block i. Immutable once built.
class GeneratedSubspace {
 public:
  static GeneratedSubspace build(Sequence mother, TargetSpec target,
                                 const ProbeOptions& opts = {});

  /// Weak-variant entry: membership of family members is delegated to the
  /// supplied deciders instead of the strong space semantics.
  static GeneratedSubspace build_with_deciders(Sequence mother, TargetSpec target,
                                               std::vector<MemberDecider> deciders,
                                               const ProbeOptions& opts = {});

  const Sequence& mother() const { return mother_; }
  const TargetSpec& target() const { return target_; }
  const IndexPartition& partition() const { return partition_; }
  /// s~ = 1 for Banach E, the quasi-exponent s for quasi-Banach lp (p < 1).
  const Rational& series_exponent() const { return stilde_; }
  const std::vector<MembershipCertificate>& admission() const { return admission_; }
  const MembershipCertificate& half_certificate() const { return half_cert_; }
  const std::vector<MemberDecider>& deciders() const { return deciders_; }

  /// y_i (1-indexed); y_1 is the mother vector itself.
  Sequence basis(uint32_t i) const;

 private:
  GeneratedSubspace(Sequence mother, TargetSpec target, IndexPartition part,
                    Rational stilde, std::vector<MembershipCertificate> admission,
                    MembershipCertificate half_cert, std::vector<MemberDecider> deciders)
      : mother_(std::move(mother)), target_(std::move(target)),
        partition_(std::move(part)), stilde_(std::move(stilde)),
        admission_(std::move(admission)), half_cert_(std::move(half_cert)),
        deciders_(std::move(deciders)) {}
  Sequence mother_;
  TargetSpec target_;
  IndexPartition partition_;
  Rational stilde_;
  std::vector<MembershipCertificate> admission_;
  MembershipCertificate half_cert_;
  std::vector<MemberDecider> deciders_;
};

Sequence generate_basis(const GeneratedSubspace& sub, uint32_t i);

/// Closed-form coordinates of z = sum a_i y_i:
///   z_r = a_1 x_r                      for r in block 1
///   z_r = a_1 x_r + a_i x_m            for r the m-th element of block i >= 2
/// (blocks beyond the coefficient list contribute the a_1 term only).
class ClosedFormCombination {
 public:
  ClosedFormCombination(Sequence mother, IndexPartition part, std::vector<Scalar> coeffs);
  Value coordinate(uint64_t r) const;
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

 private:
  Sequence mother_;
  IndexPartition part_;
  std::vector<Scalar> coeffs_;
};

/// z both as a lazy summation and via the closed form; the two must agree.
std::pair<Sequence, ClosedFormCombination> combine(const GeneratedSubspace& sub,
                                                   const std::vector<Scalar>& coeffs);

struct RankReport {
  uint32_t k = 0;
  uint64_t n_requested = 0;
  uint64_t n_effective = 0;  // after auto-expansion to reach every block
  uint32_t rank = 0;
  bool full_rank = false;
  std::string notes;
};

/// Exact rank (rational elimination) of the k x n truncation matrix of
/// y_1..y_k. n auto-expands until every basis row has a nonzero column.
RankReport verify_independence(const GeneratedSubspace& sub, uint32_t k, uint64_t n);

/// Case analysis of the escape proof for z = sum a_i y_i.
struct CombinationCertificate {
  enum class Case : uint8_t { A1Nonzero, A1ZeroApNonzero, AllZero };
  Case combination_case = Case::AllZero;
  std::vector<std::string> coefficients;
  uint32_t p_index = 0;  // first nonzero coefficient (1-based)
  std::optional<IndexSet> escaping_subsequence;
  std::vector<MembershipCertificate> per_member;
  bool all_out = false;
  bool inconclusive = false;
  std::string lift;  // the subsequence-to-sequence step

  std::string describe_case() const;
};

CombinationCertificate verify_membership(const GeneratedSubspace& sub,
                                         const std::vector<Scalar>& coeffs,
                                         const ProbeOptions& opts = {});

/// Truncated form of the norm-series estimate
///   sum_i |a_i|^s~ ||y_i||^s~ <= K^s~ ||x0||^s~ sum_i |a_i|^s~  with K = 1:
/// each basis vector is truncated to its first `terms` nonzero coordinates, so
/// the expected outcome is exact equality of the two term multisets.
struct SeriesBoundReport {
  Rational stilde;
  double lhs = 0.0;
  double rhs = 0.0;
  bool exact_equal = false;
  bool holds = false;
  uint64_t terms_per_basis = 0;
  std::string note;
};

SeriesBoundReport series_bound_check(const GeneratedSubspace& sub,
                                     const std::vector<Scalar>& coeffs, uint64_t terms);

/// The default strong-space deciders for a nested family.
std::vector<MemberDecider> strong_deciders(const NestedFamily& family,
                                           const ProbeOptions& opts = {});

}  // namespace seqspace
