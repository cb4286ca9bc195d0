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

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seqspace/rational.hpp"

namespace seqspace {

struct SeqspaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExhausted : SeqspaceError {
  using SeqspaceError::SeqspaceError;
};
struct MixedValueKinds : SeqspaceError {
  using SeqspaceError::SeqspaceError;
};
struct UnsupportedSpace : SeqspaceError {
  using SeqspaceError::SeqspaceError;
};
struct InconclusiveSplit : SeqspaceError {
  using SeqspaceError::SeqspaceError;
};
struct InsufficientTruncation : SeqspaceError {
  using SeqspaceError::SeqspaceError;
};
struct EmptyCatalog : SeqspaceError {
  using SeqspaceError::SeqspaceError;
};
struct NotAdmissible : SeqspaceError {
  using SeqspaceError::SeqspaceError;
};
struct ConfigError : SeqspaceError {
  using SeqspaceError::SeqspaceError;
};

enum class ScalarMode : uint8_t { RealRational, RealFloat, ComplexFloat };

/// Scalar field descriptor. Exact-rational is the default for every
/// certificate-producing path; float modes carry a declared epsilon.
struct ScalarField {
  ScalarMode mode = ScalarMode::RealRational;
  double epsilon = 1e-12;

  bool exact() const { return mode == ScalarMode::RealRational; }
  std::string describe() const;
};

/// One element of the scalar field. The mode is fixed at construction and
/// operations never mix modes.
class Scalar {
 public:
  Scalar() : mode_(ScalarMode::RealRational), rat_(0) {}
  static Scalar rational(Rational r) {
    Scalar s;
    s.mode_ = ScalarMode::RealRational;
    s.rat_ = std::move(r);
    return s;
  }
  static Scalar real(double d) {
    Scalar s;
    s.mode_ = ScalarMode::RealFloat;
    s.flt_ = {d, 0.0};
    return s;
  }
  static Scalar complex(std::complex<double> z) {
    Scalar s;
    s.mode_ = ScalarMode::ComplexFloat;
    s.flt_ = z;
    return s;
  }
  static Scalar zero(ScalarMode m);
  static Scalar one(ScalarMode m);

  ScalarMode mode() const { return mode_; }
  bool is_zero() const;
  const Rational& rat() const;
  std::complex<double> flt() const { return flt_; }
  double to_double() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;

  /// |x| as a real scalar (RealFloat when the input is complex).
  Scalar magnitude() const;

  std::string str() const;

 private:
  ScalarMode mode_;
  Rational rat_;
  std::complex<double> flt_{0.0, 0.0};
};

/// Finite-dimensional stand-in for the value space X (or Y): dimension plus a
/// p-norm (p in (0, inf]) or the sup norm (== p = inf).
struct VectorSpaceSpec {
  uint32_t dim = 1;
  std::optional<Rational> p;  // nullopt => sup norm

  bool sup_norm() const { return !p.has_value(); }
  std::string describe() const;
};

/// Value kind of a sequence: scalar or fixed-dimension vector.
struct ValueSpace {
  ScalarField field;
  std::optional<VectorSpaceSpec> vec;  // nullopt => scalar-valued

  bool is_vector() const { return vec.has_value(); }
  uint32_t dim() const { return vec ? vec->dim : 1; }
  bool compatible(const ValueSpace& o) const;
  std::string describe() const;
};

/// Magnitude of a value: a double approximation, plus the exact rational when
/// the mode and the norm allow one (rational scalars; sup- or 1-norm vectors).
struct Magnitude {
  double approx = 0.0;
  std::optional<Rational> exact;
};

/// A coordinate value of a sequence: a scalar or a d-vector of scalars.
class Value {
 public:
  Value() = default;
  static Value scalar(Scalar s);
  static Value vector(std::vector<Scalar> comps);
  static Value zero(const ValueSpace& vs);

  bool is_vector() const { return vector_; }
  uint32_t dim() const { return static_cast<uint32_t>(comps_.size()); }
  const Scalar& component(uint32_t i) const { return comps_.at(i); }
  const Scalar& as_scalar() const;
  bool is_zero() const;

  Value operator+(const Value& o) const;
  Value scaled(const Scalar& a) const;
  bool operator==(const Value& o) const;

  /// Norm under the given space (must be scalar <-> vs absent/scalar).
  Magnitude norm(const ValueSpace& vs) const;

  std::string str() const;

 private:
  std::vector<Scalar> comps_{Scalar()};
  bool vector_ = false;
};

}  // namespace seqspace
