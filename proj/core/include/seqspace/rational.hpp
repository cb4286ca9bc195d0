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

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seqspace {

/// Arbitrary-precision rational, always kept in canonical form.
///
/// Thin RAII wrapper over GMP's mpq_t. Certificate-producing paths depend on
/// this type being exact; nothing here rounds.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long n) {
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }
  Rational(long num, long den);
  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  /// Parses "p", "p/q" or a plain decimal such as "-1.5" (kept exact).
  static Rational parse(std::string_view text);

  /// Exact conversion; every finite double is a dyadic rational.
  static Rational from_double(double d);

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  std::optional<long> as_long() const;
  std::optional<long> num_long() const;
  std::optional<unsigned long> den_ulong() const;

  Rational operator-() const;
  Rational abs() const;
  Rational reciprocal() const;

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }
  std::strong_ordering operator<=>(const Rational& o) const {
    const int c = mpq_cmp(q_, o.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power, negative exponents allowed (value must be nonzero then).
  Rational pow_int(long e) const;

  /// Exact k-th root when the value is a perfect k-th power, nullopt otherwise.
  /// k >= 1; negative values only for odd k.
  std::optional<Rational> root_exact(unsigned long k) const;

  double to_double() const { return mpq_get_d(q_); }
  std::string str() const;

  /// num/den as decimal strings (canonical form, den > 0).
  std::string num_str() const;
  std::string den_str() const;

 private:
  mpq_t q_;
};

inline Rational operator*(long n, const Rational& r) { return Rational(n) * r; }

/// (base)^(u/v) could be irrational; compares lhs <=> base^(u/v) exactly by
/// raising both sides to the v-th power. Requires lhs >= 0 and base >= 0.
std::strong_ordering compare_pow(const Rational& lhs, const Rational& base, long u,
                                 unsigned long v);

}  // namespace seqspace
