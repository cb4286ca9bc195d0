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
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqspace/scalar.hpp"

namespace seqspace {

/// A subset of N = {1, 2, 3, ...} with a strictly increasing enumeration.
///
/// Kinds:
///   arithmetic(c, d)         {c*m + d : m >= 1}
///   dyadic_ray(i)            {2^(i-1) * (2m - 1) : m >= 1}; the rays over all
///                            i >= 1 partition N (i - 1 is the 2-adic valuation)
///   dyadic_ray affine form   {s * 2^(i-1) * (2m-1) + o : m >= 1}
///   explicit_finite(list)
///   complement_of(S)
///
/// Invariant everywhere: rank(enumerate(m)) == m.
class IndexSet {
 public:
  enum class Kind : uint8_t { ArithmeticProgression, DyadicRay, ExplicitFinite, Complement };

  static IndexSet arithmetic(uint64_t stride, int64_t offset);
  static IndexSet odds() { return arithmetic(2, -1); }
  static IndexSet evens() { return arithmetic(2, 0); }
  static IndexSet dyadic_ray(uint32_t level) { return dyadic_ray_affine(level, 1, 0); }
  static IndexSet dyadic_ray_affine(uint32_t level, uint64_t scale, int64_t offset);
  static IndexSet explicit_finite(std::vector<uint64_t> sorted_members);
  static IndexSet complement_of(IndexSet inner);

  Kind kind() const { return kind_; }
  bool infinite() const;
  std::optional<uint64_t> finite_size() const;

  bool contains(uint64_t j) const;
  /// Number of members <= j.
  uint64_t count_leq(uint64_t j) const;
  /// m-th member, m >= 1. Throws for finite sets past the end.
  uint64_t enumerate(uint64_t m) const;
  /// Position of j inside the set, if a member.
  std::optional<uint64_t> rank(uint64_t j) const;

  /// (stride, offset) when the set is exactly {stride*m + offset : m >= 1}.
  std::optional<std::pair<uint64_t, int64_t>> ap_view() const;

  uint32_t ray_level() const;  // DyadicRay only

  std::string describe() const;

 private:
  IndexSet() = default;
  Kind kind_ = Kind::ArithmeticProgression;
  // ArithmeticProgression, and the AP view of DyadicRay:
  uint64_t stride_ = 1;
  int64_t offset_ = 0;
  uint32_t level_ = 0;  // DyadicRay
  std::vector<uint64_t> members_;
  std::shared_ptr<const IndexSet> inner_;  // Complement
};

}  // namespace seqspace
