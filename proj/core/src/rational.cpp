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

#include "seqspace/rational.hpp"

#include <cctype>
#include <cmath>

namespace seqspace {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");

  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos)
      throw std::invalid_argument("Rational::parse: mixed decimal and fraction: " + s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const size_t frac_len = s.size() - dot - 1;
    Rational r;
    if (mpq_set_str(r.q_, digits.c_str(), 10) != 0)
      throw std::invalid_argument("Rational::parse: bad decimal: " + s);
    mpq_canonicalize(r.q_);
    Rational scale(1);
    mpz_ui_pow_ui(mpq_denref(scale.q_), 10, frac_len);
    mpq_canonicalize(scale.q_);
    return r * scale;
  }

  Rational r;
  if (mpq_set_str(r.q_, s.c_str(), 10) != 0)
    throw std::invalid_argument("Rational::parse: bad rational: " + s);
  if (mpz_sgn(mpq_denref(r.q_)) == 0)
    throw std::domain_error("Rational::parse: zero denominator: " + s);
  mpq_canonicalize(r.q_);
  return r;
}

Rational Rational::from_double(double d) {
  if (!std::isfinite(d)) throw std::domain_error("Rational::from_double: non-finite");
  Rational r;
  mpq_set_d(r.q_, d);
  return r;
}

std::optional<long> Rational::as_long() const {
  if (!is_integer()) return std::nullopt;
  if (!mpz_fits_slong_p(mpq_numref(q_))) return std::nullopt;
  return mpz_get_si(mpq_numref(q_));
}

std::optional<long> Rational::num_long() const {
  if (!mpz_fits_slong_p(mpq_numref(q_))) return std::nullopt;
  return mpz_get_si(mpq_numref(q_));
}

std::optional<unsigned long> Rational::den_ulong() const {
  if (!mpz_fits_ulong_p(mpq_denref(q_))) return std::nullopt;
  return mpz_get_ui(mpq_denref(q_));
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_, q_);
  return r;
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.q_, q_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational::reciprocal: zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  Rational r;
  mpq_add(r.q_, q_, o.q_);
  return r;
}
Rational Rational::operator-(const Rational& o) const {
  Rational r;
  mpq_sub(r.q_, q_, o.q_);
  return r;
}
Rational Rational::operator*(const Rational& o) const {
  Rational r;
  mpq_mul(r.q_, q_, o.q_);
  return r;
}
Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  Rational r;
  mpq_div(r.q_, q_, o.q_);
  return r;
}
Rational& Rational::operator+=(const Rational& o) {
  mpq_add(q_, q_, o.q_);
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  mpq_sub(q_, q_, o.q_);
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  mpq_mul(q_, q_, o.q_);
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  const bool inv = e < 0;
  const unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  if (inv && is_zero()) throw std::domain_error("Rational::pow_int: 0 to negative power");
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), k);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), k);
  // canonical inputs stay canonical under powering
  return inv ? r.reciprocal() : r;
}

std::optional<Rational> Rational::root_exact(unsigned long k) const {
  if (k == 0) throw std::domain_error("Rational::root_exact: k = 0");
  if (k == 1) return *this;
  if (sign() < 0 && k % 2 == 0) return std::nullopt;
  Rational r;
  mpz_t rem;
  mpz_init(rem);
  mpz_rootrem(mpq_numref(r.q_), rem, mpq_numref(q_), k);
  const bool num_ok = mpz_sgn(rem) == 0;
  if (num_ok) mpz_rootrem(mpq_denref(r.q_), rem, mpq_denref(q_), k);
  const bool den_ok = num_ok && mpz_sgn(rem) == 0;
  mpz_clear(rem);
  if (!den_ok) return std::nullopt;
  return r;
}

std::string Rational::str() const {
  char* c = mpq_get_str(nullptr, 10, q_);
  std::string s(c);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(c, s.size() + 1);
  return s;
}

std::string Rational::num_str() const {
  char* c = mpz_get_str(nullptr, 10, mpq_numref(q_));
  std::string s(c);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(c, s.size() + 1);
  return s;
}

std::string Rational::den_str() const {
  char* c = mpz_get_str(nullptr, 10, mpq_denref(q_));
  std::string s(c);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(c, s.size() + 1);
  return s;
}

std::strong_ordering compare_pow(const Rational& lhs, const Rational& base, long u,
                                 unsigned long v) {
  if (lhs.sign() < 0 || base.sign() < 0)
    throw std::domain_error("compare_pow: negative operand");
  if (v == 0) throw std::domain_error("compare_pow: zero root index");
  // lhs <=> base^(u/v)  <=>  lhs^v <=> base^u   (all quantities nonnegative)
  const Rational l = lhs.pow_int(static_cast<long>(v));
  const Rational r = base.is_zero() && u < 0
                         ? throw std::domain_error("compare_pow: 0 to negative power")
                         : base.pow_int(u);
  return l <=> r;
}

}  // namespace seqspace
