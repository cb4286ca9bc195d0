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

#include "seqspace/scalar.hpp"

#include <cmath>
#include <sstream>

namespace seqspace {

std::string ScalarField::describe() const {
  switch (mode) {
    case ScalarMode::RealRational:
      return "real-rational";
    case ScalarMode::RealFloat:
      return "real-float(eps=" + std::to_string(epsilon) + ")";
    case ScalarMode::ComplexFloat:
      return "complex-float(eps=" + std::to_string(epsilon) + ")";
  }
  return "?";
}

Scalar Scalar::zero(ScalarMode m) {
  switch (m) {
    case ScalarMode::RealRational:
      return Scalar::rational(Rational(0));
    case ScalarMode::RealFloat:
      return Scalar::real(0.0);
    case ScalarMode::ComplexFloat:
      return Scalar::complex({0.0, 0.0});
  }
  throw SeqspaceError("Scalar::zero: bad mode");
}

Scalar Scalar::one(ScalarMode m) {
  switch (m) {
    case ScalarMode::RealRational:
      return Scalar::rational(Rational(1));
    case ScalarMode::RealFloat:
      return Scalar::real(1.0);
    case ScalarMode::ComplexFloat:
      return Scalar::complex({1.0, 0.0});
  }
  throw SeqspaceError("Scalar::one: bad mode");
}

bool Scalar::is_zero() const {
  if (mode_ == ScalarMode::RealRational) return rat_.is_zero();
  return flt_ == std::complex<double>(0.0, 0.0);
}

const Rational& Scalar::rat() const {
  if (mode_ != ScalarMode::RealRational)
    throw SeqspaceError("Scalar::rat: not in rational mode");
  return rat_;
}

double Scalar::to_double() const {
  if (mode_ == ScalarMode::RealRational) return rat_.to_double();
  return flt_.real();
}

static void require_same_mode(const Scalar& a, const Scalar& b, const char* op) {
  if (a.mode() != b.mode())
    throw MixedValueKinds(std::string("Scalar: mixed scalar modes in ") + op);
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_mode(*this, o, "+");
  if (mode_ == ScalarMode::RealRational) return Scalar::rational(rat_ + o.rat_);
  Scalar s;
  s.mode_ = mode_;
  s.flt_ = flt_ + o.flt_;
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_mode(*this, o, "*");
  if (mode_ == ScalarMode::RealRational) return Scalar::rational(rat_ * o.rat_);
  Scalar s;
  s.mode_ = mode_;
  s.flt_ = flt_ * o.flt_;
  return s;
}

Scalar Scalar::operator-() const {
  if (mode_ == ScalarMode::RealRational) return Scalar::rational(-rat_);
  Scalar s;
  s.mode_ = mode_;
  s.flt_ = -flt_;
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (mode_ != o.mode_) return false;
  if (mode_ == ScalarMode::RealRational) return rat_ == o.rat_;
  return flt_ == o.flt_;
}

Scalar Scalar::magnitude() const {
  switch (mode_) {
    case ScalarMode::RealRational:
      return Scalar::rational(rat_.abs());
    case ScalarMode::RealFloat:
      return Scalar::real(std::fabs(flt_.real()));
    case ScalarMode::ComplexFloat:
      return Scalar::real(std::abs(flt_));
  }
  throw SeqspaceError("Scalar::magnitude: bad mode");
}

std::string Scalar::str() const {
  if (mode_ == ScalarMode::RealRational) return rat_.str();
  std::ostringstream os;
  if (mode_ == ScalarMode::RealFloat) {
    os << flt_.real();
  } else {
    os << flt_.real() << (flt_.imag() < 0 ? "-" : "+") << std::fabs(flt_.imag()) << "i";
  }
  return os.str();
}

std::string VectorSpaceSpec::describe() const {
  std::string n = sup_norm() ? "sup" : ("p=" + p->str());
  return "K^" + std::to_string(dim) + "(" + n + ")";
}

bool ValueSpace::compatible(const ValueSpace& o) const {
  if (field.mode != o.field.mode) return false;
  if (is_vector() != o.is_vector()) return false;
  if (is_vector() && vec->dim != o.vec->dim) return false;
  return true;
}

std::string ValueSpace::describe() const {
  return is_vector() ? vec->describe() + "/" + field.describe() : field.describe();
}

Value Value::scalar(Scalar s) {
  Value v;
  v.comps_ = {std::move(s)};
  v.vector_ = false;
  return v;
}

Value Value::vector(std::vector<Scalar> comps) {
  if (comps.empty()) throw SeqspaceError("Value::vector: empty component list");
  Value v;
  v.comps_ = std::move(comps);
  v.vector_ = true;
  return v;
}

Value Value::zero(const ValueSpace& vs) {
  if (!vs.is_vector()) return Value::scalar(Scalar::zero(vs.field.mode));
  std::vector<Scalar> c(vs.vec->dim, Scalar::zero(vs.field.mode));
  return Value::vector(std::move(c));
}

const Scalar& Value::as_scalar() const {
  if (vector_) throw MixedValueKinds("Value::as_scalar: value is a vector");
  return comps_[0];
}

bool Value::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

Value Value::operator+(const Value& o) const {
  if (vector_ != o.vector_ || comps_.size() != o.comps_.size())
    throw MixedValueKinds("Value: adding values of different kinds");
  Value v = *this;
  for (size_t i = 0; i < comps_.size(); ++i) v.comps_[i] = comps_[i] + o.comps_[i];
  return v;
}

Value Value::scaled(const Scalar& a) const {
  Value v = *this;
  for (auto& c : v.comps_) c = c * a;
  return v;
}

bool Value::operator==(const Value& o) const {
  if (vector_ != o.vector_ || comps_.size() != o.comps_.size()) return false;
  for (size_t i = 0; i < comps_.size(); ++i)
    if (!(comps_[i] == o.comps_[i])) return false;
  return true;
}

Magnitude Value::norm(const ValueSpace& vs) const {
  Magnitude m;
  if (!vector_) {
    Scalar a = comps_[0].magnitude();
    m.approx = a.to_double();
    if (a.mode() == ScalarMode::RealRational) m.exact = a.rat();
    return m;
  }
  if (!vs.is_vector() || vs.vec->dim != comps_.size())
    throw MixedValueKinds("Value::norm: value space mismatch");
  const auto& spec = *vs.vec;
  const bool exact_mode = vs.field.exact();
  if (spec.sup_norm()) {
    Rational best(0);
    double bestd = 0.0;
    for (const auto& c : comps_) {
      Scalar a = c.magnitude();
      bestd = std::max(bestd, a.to_double());
      if (exact_mode && a.rat() > best) best = a.rat();
    }
    m.approx = bestd;
    if (exact_mode) m.exact = best;
    return m;
  }
  const Rational& p = *spec.p;
  if (exact_mode && p == Rational(1)) {
    Rational sum(0);
    for (const auto& c : comps_) sum += c.magnitude().rat();
    m.exact = sum;
    m.approx = sum.to_double();
    return m;
  }
  double sum = 0.0;
  const double pd = p.to_double();
  for (const auto& c : comps_) sum += std::pow(c.magnitude().to_double(), pd);
  m.approx = std::pow(sum, 1.0 / pd);
  return m;
}

std::string Value::str() const {
  if (!vector_) return comps_[0].str();
  std::string s = "(";
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += ", ";
    s += comps_[i].str();
  }
  return s + ")";
}

}  // namespace seqspace
