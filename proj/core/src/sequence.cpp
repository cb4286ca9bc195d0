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

#include "seqspace/sequence.hpp"

#include <cmath>
#include <mutex>
#include <numeric>

namespace seqspace {

// ---- envelope helpers -------------------------------------------------------

double PowLogEnvelope::reference(uint64_t k) const {
  const double kd = static_cast<double>(k);
  return std::pow(kd, -a.to_double()) * std::pow(std::log(kd + 1.0), -b.to_double());
}

namespace {

// Outward-rounded rational bounds for a positive double. These only feed
// sampled bracket checks and reports; exponent arithmetic stays exact.
Rational outward_lo(double v) {
  if (!(v > 0)) throw SeqspaceError("envelope: nonpositive constant");
  return Rational::from_double(v * (1.0 - 1e-9));
}
Rational outward_hi(double v) { return Rational::from_double(v * (1.0 + 1e-9)); }

}  // namespace

PowLogEnvelope envelope_scaled(const PowLogEnvelope& e, const Rational& factor) {
  const Rational f = factor.abs();
  if (f.is_zero()) throw SeqspaceError("envelope_scaled: zero factor");
  return PowLogEnvelope{e.a, e.b, e.lo * f, e.hi * f};
}

PowLogEnvelope envelope_powered(const PowLogEnvelope& e, const Rational& r) {
  if (r.sign() <= 0) throw SeqspaceError("envelope_powered: exponent must be positive");
  const double rd = r.to_double();
  return PowLogEnvelope{e.a * r, e.b * r, outward_lo(std::pow(e.lo.to_double(), rd)),
                        outward_hi(std::pow(e.hi.to_double(), rd))};
}

PowLogEnvelope envelope_restricted_ap(const PowLogEnvelope& e, uint64_t stride,
                                      int64_t offset) {
  // Positions k = stride*m + offset satisfy alpha*m <= k <= beta*m for m >= 1.
  const double c = static_cast<double>(stride);
  const double d = static_cast<double>(offset);
  const double alpha = offset <= 0 ? c + d : c;
  const double beta = offset >= 0 ? c + d : c;
  if (!(alpha >= 1.0)) throw SeqspaceError("envelope_restricted_ap: empty progression");

  const double ad = e.a.to_double();
  const double bd = e.b.to_double();
  // k^-a in [min, max] * m^-a over the slope interval.
  const double j_lo = std::min(std::pow(alpha, -ad), std::pow(beta, -ad));
  const double j_hi = std::max(std::pow(alpha, -ad), std::pow(beta, -ad));
  // log(k+1)/log(m+1) lies in [1, R].
  const double R = 1.0 + std::log(beta) / std::log(2.0);
  const double l_lo = std::min(1.0, std::pow(R, -bd));
  const double l_hi = std::max(1.0, std::pow(R, -bd));

  return PowLogEnvelope{e.a, e.b, outward_lo(e.lo.to_double() * j_lo * l_lo),
                        outward_hi(e.hi.to_double() * j_hi * l_hi)};
}

bool envelope_brackets(const PowLogEnvelope& e, double magnitude, uint64_t k,
                       double slack) {
  const double ref = e.reference(k);
  return magnitude >= e.lo.to_double() * ref * (1.0 - slack) &&
         magnitude <= e.hi.to_double() * ref * (1.0 + slack);
}

// ---- node hierarchy ---------------------------------------------------------

class SeqNode {
 public:
  explicit SeqNode(ValueSpace vs) : vs_(std::move(vs)) {}
  virtual ~SeqNode() = default;
  virtual Value eval(uint64_t j) const = 0;
  virtual std::string describe() const = 0;
  virtual std::optional<Scalar> constant_value() const { return std::nullopt; }

  const ValueSpace& values() const { return vs_; }
  const std::optional<PowLogEnvelope>& envelope() const { return env_; }
  SupportHint support() const { return support_; }
  std::optional<uint64_t> support_bound() const { return bound_; }
  const std::optional<ExactTail>& exact_tail() const { return tail_; }

 protected:
  ValueSpace vs_;
  std::optional<PowLogEnvelope> env_;
  SupportHint support_ = SupportHint::Unknown;
  std::optional<uint64_t> bound_;
  std::optional<ExactTail> tail_;
};

Value Sequence::eval(uint64_t j) const {
  if (j < 1) throw SeqspaceError("Sequence::eval: indices start at 1");
  return node_->eval(j);
}
const ValueSpace& Sequence::values() const { return node_->values(); }
const std::optional<PowLogEnvelope>& Sequence::envelope() const { return node_->envelope(); }
SupportHint Sequence::support() const { return node_->support(); }
std::optional<uint64_t> Sequence::support_bound() const { return node_->support_bound(); }
const std::optional<ExactTail>& Sequence::exact_tail() const { return node_->exact_tail(); }
std::optional<Scalar> Sequence::constant_value() const { return node_->constant_value(); }
std::string Sequence::describe() const { return node_->describe(); }

namespace {

Scalar scalar_from_rational(const Rational& r, ScalarMode mode) {
  switch (mode) {
    case ScalarMode::RealRational:
      return Scalar::rational(r);
    case ScalarMode::RealFloat:
      return Scalar::real(r.to_double());
    case ScalarMode::ComplexFloat:
      return Scalar::complex({r.to_double(), 0.0});
  }
  throw SeqspaceError("scalar_from_rational: bad mode");
}

uint64_t lcm_u64(uint64_t a, uint64_t b) { return a / std::gcd(a, b) * b; }

// ---- leaf nodes ----

class ZeroNode final : public SeqNode {
 public:
  explicit ZeroNode(ValueSpace vs) : SeqNode(std::move(vs)) {
    support_ = SupportHint::FiniteSupport;
    bound_ = 0;
    tail_ = ExactTail{1, 1, Rational(0)};
  }
  Value eval(uint64_t) const override { return Value::zero(vs_); }
  std::string describe() const override { return "zero"; }
  std::optional<Scalar> constant_value() const override {
    return vs_.is_vector() ? std::nullopt : std::make_optional(Scalar::zero(vs_.field.mode));
  }
};

class ExplicitNode final : public SeqNode {
 public:
  ExplicitNode(std::vector<Value> vals, ValueSpace vs)
      : SeqNode(std::move(vs)), vals_(std::move(vals)) {
    support_ = SupportHint::FiniteSupport;
    uint64_t last = 0;
    for (size_t i = 0; i < vals_.size(); ++i)
      if (!vals_[i].is_zero()) last = i + 1;
    bound_ = last;
    tail_ = ExactTail{vals_.size() + 1, 1, Rational(0)};
  }
  Value eval(uint64_t j) const override {
    if (j <= vals_.size()) return vals_[j - 1];
    return Value::zero(vs_);
  }
  std::string describe() const override {
    std::string s = "explicit[";
    for (size_t i = 0; i < vals_.size() && i < 4; ++i) {
      if (i) s += ",";
      s += vals_[i].str();
    }
    if (vals_.size() > 4) s += ",...";
    return s + "]";
  }

 private:
  std::vector<Value> vals_;
};

class PeriodicGeometricNode final : public SeqNode {
 public:
  PeriodicGeometricNode(std::vector<Scalar> block, Rational ratio, ValueSpace vs)
      : SeqNode(std::move(vs)), block_(std::move(block)), ratio_(std::move(ratio)) {
    tail_ = ExactTail{1, block_.size(), ratio_};
    uint64_t last_nonzero = 0;
    for (size_t i = 0; i < block_.size(); ++i)
      if (!block_[i].is_zero()) last_nonzero = i + 1;
    if (last_nonzero == 0 || ratio_.is_zero()) {
      support_ = SupportHint::FiniteSupport;
      bound_ = last_nonzero;
    } else {
      support_ = SupportHint::Infinite;
    }
  }
  Value eval(uint64_t j) const override {
    const uint64_t m = (j - 1) / block_.size();
    const uint64_t r = (j - 1) % block_.size();
    const Scalar& base = block_[r];
    if (base.is_zero()) return Value::scalar(Scalar::zero(vs_.field.mode));
    if (vs_.field.exact()) {
      return Value::scalar(base * Scalar::rational(ratio_.pow_int(static_cast<long>(m))));
    }
    const double f = std::pow(ratio_.to_double(), static_cast<double>(m));
    return Value::scalar(base * (vs_.field.mode == ScalarMode::ComplexFloat
                                     ? Scalar::complex({f, 0.0})
                                     : Scalar::real(f)));
  }
  std::string describe() const override {
    return "periodic-geometric[" + std::to_string(block_.size()) + "]*(" + ratio_.str() + ")";
  }
  std::optional<Scalar> constant_value() const override {
    if (ratio_ == Rational(1)) {
      for (const auto& s : block_)
        if (!(s == block_[0])) return std::nullopt;
      return block_[0];
    }
    return std::nullopt;
  }
  const std::vector<Scalar>& block() const { return block_; }
  const Rational& ratio() const { return ratio_; }

 private:
  std::vector<Scalar> block_;
  Rational ratio_;
};

class PowLogNode final : public SeqNode {
 public:
  PowLogNode(Rational a, Rational b, Rational c, ValueSpace vs)
      : SeqNode(std::move(vs)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    support_ = SupportHint::Infinite;
    const bool closed_form = b_.is_zero() && a_.is_integer();
    const Rational ca = c_.abs();
    env_ = closed_form ? PowLogEnvelope{a_, b_, ca, ca}
                       : PowLogEnvelope{a_, b_, ca * Rational(1, 2), ca * Rational(2)};
  }
  Value eval(uint64_t j) const override {
    if (!vs_.field.exact()) {
      const double v = c_.to_double() * reference_double(j);
      return Value::scalar(vs_.field.mode == ScalarMode::ComplexFloat
                               ? Scalar::complex({v, 0.0})
                               : Scalar::real(v));
    }
    if (b_.is_zero()) {
      if (auto ai = a_.as_long())
        return Value::scalar(
            Scalar::rational(c_ * Rational(static_cast<long>(j)).pow_int(-*ai)));
      // j^-a for a = u/v: exact when j^-u is a perfect v-th power.
      const auto u = a_.num_long();
      const auto v = a_.den_ulong();
      if (u && v) {
        const Rational t = Rational(static_cast<long>(j)).pow_int(-*u);
        if (auto root = t.root_exact(*v)) return Value::scalar(Scalar::rational(c_ * *root));
      }
    }
    const double ref = reference_double(j);
    // An underflowed reference would yield an exact zero and break the
    // nonzero-floor guarantee of the envelope.
    if (ref == 0.0 || !std::isfinite(ref))
      throw SeqspaceError("powlog evaluation out of double range at j = " +
                          std::to_string(j) + " for " + describe());
    return Value::scalar(Scalar::rational(c_ * Rational::from_double(ref)));
  }
  std::string describe() const override {
    return "powlog(a=" + a_.str() + ",b=" + b_.str() + ",c=" + c_.str() + ")";
  }
  std::optional<Scalar> constant_value() const override {
    if (a_.is_zero() && b_.is_zero()) return scalar_from_rational(c_, vs_.field.mode);
    return std::nullopt;
  }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

 private:
  double reference_double(uint64_t j) const {
    const double jd = static_cast<double>(j);
    double v = std::pow(jd, -a_.to_double());
    if (!b_.is_zero()) v *= std::pow(std::log(jd + 1.0), -b_.to_double());
    return v;
  }
  Rational a_, b_, c_;
};

// ---- combinators ----

class RestrictNode final : public SeqNode {
 public:
  RestrictNode(std::shared_ptr<const SeqNode> inner, IndexSet s)
      : SeqNode(inner->values()), inner_(std::move(inner)), s_(std::move(s)) {
    if (auto sz = s_.finite_size()) {
      support_ = SupportHint::FiniteSupport;
      bound_ = *sz;
    } else if (inner_->support() == SupportHint::FiniteSupport) {
      support_ = SupportHint::FiniteSupport;
      if (auto b = inner_->support_bound()) bound_ = s_.count_leq(*b);
    } else if (inner_->envelope() && inner_->envelope()->lo.sign() > 0) {
      support_ = SupportHint::Infinite;
    }
    if (const auto ap = s_.ap_view()) {
      if (inner_->envelope())
        env_ = envelope_restricted_ap(*inner_->envelope(), ap->first, ap->second);
      if (const auto& t = inner_->exact_tail()) {
        const uint64_t c = ap->first;
        const uint64_t g = std::gcd(c, t->period);
        const uint64_t hops = c / g;  // periods advanced per output period
        __int128 num = static_cast<__int128>(t->start) - ap->second;
        uint64_t start = 1;
        if (num > 0)
          start = static_cast<uint64_t>((num + static_cast<__int128>(c) - 1) / c);
        tail_ = ExactTail{std::max<uint64_t>(start, 1), t->period / g,
                          t->ratio.pow_int(static_cast<long>(hops))};
      }
    }
  }
  Value eval(uint64_t m) const override {
    if (auto sz = s_.finite_size())
      if (m > *sz) return Value::zero(vs_);
    return inner_->eval(s_.enumerate(m));
  }
  std::string describe() const override {
    return "restrict(" + inner_->describe() + ", " + s_.describe() + ")";
  }
  std::optional<Scalar> constant_value() const override {
    if (!s_.infinite()) return std::nullopt;
    return inner_->constant_value();
  }
  const SeqNode* inner() const { return inner_.get(); }
  std::shared_ptr<const SeqNode> inner_share() const { return inner_; }
  const IndexSet& set() const { return s_; }

 private:
  std::shared_ptr<const SeqNode> inner_;
  IndexSet s_;
};

class EmbedNode final : public SeqNode {
 public:
  EmbedNode(std::shared_ptr<const SeqNode> inner, IndexSet s)
      : SeqNode(inner->values()), inner_(std::move(inner)), s_(std::move(s)) {
    support_ = inner_->support();
    if (support_ == SupportHint::FiniteSupport) {
      if (auto b = inner_->support_bound()) {
        if (*b == 0)
          bound_ = 0;
        else
          try {
            bound_ = s_.enumerate(*b);
          } catch (const SeqspaceError&) {
            bound_ = std::nullopt;
          }
      }
    }
    if (const auto ap = s_.ap_view()) {
      if (const auto& t = inner_->exact_tail()) {
        const __int128 st =
            static_cast<__int128>(ap->first) * t->start + ap->second;
        tail_ = ExactTail{st < 1 ? 1 : static_cast<uint64_t>(st),
                          ap->first * t->period, t->ratio};
      }
    }
  }
  Value eval(uint64_t j) const override {
    if (const auto r = s_.rank(j)) return inner_->eval(*r);
    return Value::zero(vs_);
  }
  std::string describe() const override {
    return "embed(" + inner_->describe() + ", " + s_.describe() + ")";
  }
  const SeqNode* inner() const { return inner_.get(); }
  std::shared_ptr<const SeqNode> inner_share() const { return inner_; }
  const IndexSet& set() const { return s_; }

 private:
  std::shared_ptr<const SeqNode> inner_;
  IndexSet s_;
};

class CombineNode final : public SeqNode {
 public:
  CombineNode(std::vector<std::pair<Scalar, std::shared_ptr<const SeqNode>>> terms,
              ValueSpace vs)
      : SeqNode(std::move(vs)), terms_(std::move(terms)) {
    if (terms_.size() == 1 && terms_[0].second->envelope() &&
        terms_[0].first.mode() == ScalarMode::RealRational)
      env_ = envelope_scaled(*terms_[0].second->envelope(), terms_[0].first.rat());
    bool all_finite = true;
    uint64_t max_bound = 0;
    bool bounds_known = true;
    for (const auto& [a, n] : terms_) {
      all_finite = all_finite && n->support() == SupportHint::FiniteSupport;
      if (auto b = n->support_bound())
        max_bound = std::max(max_bound, *b);
      else
        bounds_known = false;
    }
    if (all_finite) {
      support_ = SupportHint::FiniteSupport;
      if (bounds_known) bound_ = max_bound;
    } else if (terms_.size() == 1) {
      support_ = terms_[0].second->support();
      bound_ = terms_[0].second->support_bound();
    }
    compute_tail();
  }
  Value eval(uint64_t j) const override {
    Value acc = Value::zero(vs_);
    for (const auto& [a, n] : terms_) acc = acc + n->eval(j).scaled(a);
    return acc;
  }
  std::string describe() const override {
    std::string s = "combine(";
    for (size_t i = 0; i < terms_.size(); ++i) {
      if (i) s += " + ";
      s += terms_[i].first.str() + "*" + terms_[i].second->describe();
    }
    return s + ")";
  }
  std::optional<Scalar> constant_value() const override {
    Scalar acc = Scalar::zero(vs_.field.mode);
    for (const auto& [a, n] : terms_) {
      auto c = n->constant_value();
      if (!c) return std::nullopt;
      acc = acc + *c * a;
    }
    return acc;
  }
  const auto& terms() const { return terms_; }

 private:
  void compute_tail() {
    if (!vs_.field.exact()) return;
    uint64_t period = 1, start = 1;
    for (const auto& [a, n] : terms_) {
      const auto& t = n->exact_tail();
      if (!t) return;
      period = lcm_u64(period, t->period);
      start = std::max(start, t->start);
    }
    std::optional<Rational> common;
    for (const auto& [a, n] : terms_) {
      const auto& t = n->exact_tail();
      const Rational r = t->ratio.pow_int(static_cast<long>(period / t->period));
      if (!common)
        common = r;
      else if (!(*common == r))
        return;
    }
    if (common) tail_ = ExactTail{start, period, *common};
  }
  std::vector<std::pair<Scalar, std::shared_ptr<const SeqNode>>> terms_;
};

class MappedNode final : public SeqNode {
 public:
  MappedNode(std::function<Value(const Value&)> f, std::shared_ptr<const SeqNode> inner,
             ValueSpace out, std::optional<PowLogEnvelope> env, bool preserves_support,
             std::string label)
      : SeqNode(std::move(out)), f_(std::move(f)), inner_(std::move(inner)),
        label_(std::move(label)) {
    env_ = std::move(env);
    if (preserves_support) {
      support_ = inner_->support();
      bound_ = inner_->support_bound();
    } else if (inner_->support() == SupportHint::FiniteSupport) {
      support_ = SupportHint::FiniteSupport;  // f(0) = 0 keeps zeros zero
      bound_ = inner_->support_bound();
    }
  }
  Value eval(uint64_t j) const override { return f_(inner_->eval(j)); }
  std::string describe() const override {
    return label_ + "(" + inner_->describe() + ")";
  }

 private:
  std::function<Value(const Value&)> f_;
  std::shared_ptr<const SeqNode> inner_;
  std::string label_;
};

class ZeroFreeNode final : public SeqNode {
 public:
  ZeroFreeNode(std::shared_ptr<const SeqNode> inner, uint64_t budget)
      : SeqNode(inner->values()), inner_(std::move(inner)), budget_(budget) {
    support_ = inner_->support() == SupportHint::Infinite ? SupportHint::Infinite
                                                          : SupportHint::Unknown;
  }
  Value eval(uint64_t k) const override { return inner_->eval(source_position(k)); }
  std::string describe() const override {
    return "zero-free(" + inner_->describe() + ")";
  }

 private:
  uint64_t source_position(uint64_t k) const {
    std::lock_guard<std::mutex> lock(mu_);
    uint64_t scanned_this_call = 0;
    while (positions_.size() < k) {
      if (++scanned_this_call > budget_)
        throw BudgetExhausted(
            "zero_free_version: found only " + std::to_string(positions_.size()) +
            " nonzero coordinates scanning " + std::to_string(scanned_to_) + " indices");
      ++scanned_to_;
      if (!inner_->eval(scanned_to_).is_zero()) positions_.push_back(scanned_to_);
    }
    return positions_[k - 1];
  }
  std::shared_ptr<const SeqNode> inner_;
  uint64_t budget_;
  mutable std::mutex mu_;
  mutable std::vector<uint64_t> positions_;
  mutable uint64_t scanned_to_ = 0;
};

class VectorBundleNode final : public SeqNode {
 public:
  VectorBundleNode(std::vector<Sequence> coords, ValueSpace vs)
      : SeqNode(std::move(vs)), coords_(std::move(coords)) {
    // Envelope lifts from a single nonzero coordinate (axis vectors have unit
    // norm under every supported vector norm).
    size_t nonzero = 0, which = 0;
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i].support() == SupportHint::FiniteSupport &&
          coords_[i].support_bound() == std::optional<uint64_t>(0))
        continue;
      ++nonzero;
      which = i;
    }
    if (nonzero == 1) {
      env_ = coords_[which].envelope();
      support_ = coords_[which].support();
      bound_ = coords_[which].support_bound();
    } else {
      bool any_infinite = false, all_finite = true;
      uint64_t max_bound = 0;
      bool bounds_known = true;
      for (const auto& c : coords_) {
        any_infinite = any_infinite || c.support() == SupportHint::Infinite;
        all_finite = all_finite && c.support() == SupportHint::FiniteSupport;
        if (auto b = c.support_bound())
          max_bound = std::max(max_bound, *b);
        else
          bounds_known = false;
      }
      if (any_infinite)
        support_ = SupportHint::Infinite;
      else if (all_finite) {
        support_ = SupportHint::FiniteSupport;
        if (bounds_known) bound_ = max_bound;
      }
    }
    compute_tail();
  }
  Value eval(uint64_t j) const override {
    std::vector<Scalar> comps;
    comps.reserve(coords_.size());
    for (const auto& c : coords_) comps.push_back(c.eval(j).as_scalar());
    return Value::vector(std::move(comps));
  }
  std::string describe() const override {
    std::string s = "bundle(";
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ", ";
      s += coords_[i].describe();
    }
    return s + ")";
  }
  const std::vector<Sequence>& coords() const { return coords_; }

 private:
  void compute_tail() {
    uint64_t period = 1, start = 1;
    for (const auto& c : coords_) {
      const auto& t = c.exact_tail();
      if (!t) return;
      period = lcm_u64(period, t->period);
      start = std::max(start, t->start);
    }
    std::optional<Rational> common;
    for (const auto& c : coords_) {
      const auto& t = c.exact_tail();
      const Rational r = t->ratio.pow_int(static_cast<long>(period / t->period));
      if (!common)
        common = r;
      else if (!(*common == r))
        return;
    }
    if (common) tail_ = ExactTail{start, period, *common};
  }
  std::vector<Sequence> coords_;
};

class FunctionalImageNode final : public SeqNode {
 public:
  FunctionalImageNode(std::shared_ptr<const SeqNode> inner, std::vector<Rational> phi)
      : SeqNode(ValueSpace{inner->values().field, std::nullopt}), inner_(std::move(inner)),
        phi_(std::move(phi)) {}
  Value eval(uint64_t j) const override {
    const Value v = inner_->eval(j);
    Scalar acc = Scalar::zero(vs_.field.mode);
    for (uint32_t i = 0; i < v.dim(); ++i)
      acc = acc + v.component(i) * scalar_from_rational(phi_[i], vs_.field.mode);
    return Value::scalar(acc);
  }
  std::string describe() const override {
    return "functional-image(" + inner_->describe() + ")";
  }

 private:
  std::shared_ptr<const SeqNode> inner_;
  std::vector<Rational> phi_;
};

bool is_zero_node(const SeqNode* n) {
  if (dynamic_cast<const ZeroNode*>(n)) return true;
  if (n->support() == SupportHint::FiniteSupport &&
      n->support_bound() == std::optional<uint64_t>(0))
    return true;
  return false;
}

}  // namespace

// ---- factories ----------------------------------------------------------------

Sequence zero_sequence(ValueSpace vs) {
  return Sequence(std::make_shared<ZeroNode>(std::move(vs)));
}

Sequence explicit_sequence(std::vector<Value> values, ValueSpace vs) {
  for (const auto& v : values)
    if (v.is_vector() != vs.is_vector() || (v.is_vector() && v.dim() != vs.dim()))
      throw MixedValueKinds("explicit_sequence: value kind mismatch");
  bool all_zero = true;
  for (const auto& v : values) all_zero = all_zero && v.is_zero();
  if (all_zero) return zero_sequence(std::move(vs));
  return Sequence(std::make_shared<ExplicitNode>(std::move(values), std::move(vs)));
}

Sequence unit_coordinate_sequence(uint64_t j0, ScalarField field) {
  ValueSpace vs{field, std::nullopt};
  std::vector<Value> vals(j0, Value::scalar(Scalar::zero(field.mode)));
  vals[j0 - 1] = Value::scalar(Scalar::one(field.mode));
  return explicit_sequence(std::move(vals), vs);
}

Sequence periodic_geometric_sequence(std::vector<Scalar> block, Rational ratio,
                                     ScalarField field) {
  if (block.empty()) throw SeqspaceError("periodic_geometric_sequence: empty block");
  for (const auto& s : block)
    if (s.mode() != field.mode)
      throw MixedValueKinds("periodic_geometric_sequence: block mode mismatch");
  ValueSpace vs{field, std::nullopt};
  bool all_zero = true;
  for (const auto& s : block) all_zero = all_zero && s.is_zero();
  if (all_zero) return zero_sequence(vs);
  return Sequence(
      std::make_shared<PeriodicGeometricNode>(std::move(block), std::move(ratio), vs));
}

Sequence geometric_sequence(Rational ratio, ScalarField field, Rational scale) {
  // x_j = scale * ratio^j = (scale*ratio) * ratio^(j-1)
  Scalar first = scalar_from_rational(scale * ratio, field.mode);
  return periodic_geometric_sequence({std::move(first)}, std::move(ratio), field);
}

Sequence powlog_sequence(Rational a, Rational b, Rational c, ScalarField field) {
  ValueSpace vs{field, std::nullopt};
  if (c.is_zero()) return zero_sequence(vs);
  return Sequence(
      std::make_shared<PowLogNode>(std::move(a), std::move(b), std::move(c), vs));
}

Sequence harmonic_sequence(ScalarField field) {
  return powlog_sequence(Rational(1), Rational(0), Rational(1), field);
}

Sequence vector_bundle(std::vector<Sequence> coords, VectorSpaceSpec vspec) {
  if (coords.empty() || coords.size() != vspec.dim)
    throw MixedValueKinds("vector_bundle: coordinate count != dimension");
  for (const auto& c : coords)
    if (c.values().is_vector() || c.values().field.mode != coords[0].values().field.mode)
      throw MixedValueKinds("vector_bundle: coordinates must be scalar, same mode");
  ValueSpace vs{coords[0].values().field, vspec};
  return Sequence(std::make_shared<VectorBundleNode>(std::move(coords), vs));
}

Sequence axis_sequence(const Sequence& scalar_seq, uint32_t axis, VectorSpaceSpec vspec) {
  if (axis >= vspec.dim) throw SeqspaceError("axis_sequence: axis out of range");
  std::vector<Sequence> coords;
  coords.reserve(vspec.dim);
  for (uint32_t i = 0; i < vspec.dim; ++i)
    coords.push_back(i == axis ? scalar_seq
                               : zero_sequence(ValueSpace{scalar_seq.values().field,
                                                          std::nullopt}));
  return vector_bundle(std::move(coords), vspec);
}

// ---- operations ----------------------------------------------------------------

Value eval(const Sequence& s, uint64_t j) { return s.eval(j); }

Scalar eval_scalar(const Sequence& s, uint64_t j) { return s.eval(j).as_scalar(); }

Sequence zero_free_version(const Sequence& s, uint64_t budget) {
  if (s.support() == SupportHint::FiniteSupport) return zero_sequence(s.values());
  if (s.envelope() && s.envelope()->lo.sign() > 0) return s;  // no zero coordinates
  if (const auto* e = dynamic_cast<const EmbedNode*>(s.node()))
    return zero_free_version(Sequence(e->inner_share()), budget);
  if (dynamic_cast<const ZeroFreeNode*>(s.node())) return s;  // already zero-free
  if (const auto* p = dynamic_cast<const PeriodicGeometricNode*>(s.node());
      p && !p->ratio().is_zero()) {
    // Dropping the zero block entries keeps the nonzero coordinates in order.
    std::vector<Scalar> filtered;
    for (const auto& v : p->block())
      if (!v.is_zero()) filtered.push_back(v);
    if (filtered.size() == p->block().size()) return s;  // no zeros at all
    return periodic_geometric_sequence(std::move(filtered), p->ratio(), s.values().field);
  }
  return Sequence(std::make_shared<ZeroFreeNode>(s.share(), budget));
}

Sequence restrict_to(const Sequence& s, const IndexSet& S) {
  // restrict(embed(x, T), S) with T and S disjoint progressions is zero:
  // the congruence c1*m + d1 = c2*k + d2 has no solution when
  // gcd(c1, c2) does not divide d2 - d1.
  if (const auto* e = dynamic_cast<const EmbedNode*>(s.node())) {
    const auto t_ap = e->set().ap_view();
    const auto s_ap = S.ap_view();
    if (t_ap && s_ap) {
      const auto g = static_cast<int64_t>(std::gcd(t_ap->first, s_ap->first));
      const int64_t diff = s_ap->second - t_ap->second;
      if (diff % g != 0) return zero_sequence(s.values());
    }
  }
  // Restriction acts coordinatewise on bundles.
  if (const auto* b = dynamic_cast<const VectorBundleNode*>(s.node())) {
    std::vector<Sequence> coords;
    for (const auto& c : b->coords()) coords.push_back(restrict_to(c, S));
    return vector_bundle(std::move(coords), *s.values().vec);
  }
  return Sequence(std::make_shared<RestrictNode>(s.share(), S));
}

Sequence embed_into(const Sequence& s, const IndexSet& S) {
  if (!S.infinite()) throw SeqspaceError("embed_into: index set must be infinite");
  if (is_zero_node(s.node())) return zero_sequence(s.values());
  // Embedding acts coordinatewise on bundles.
  if (const auto* b = dynamic_cast<const VectorBundleNode*>(s.node())) {
    std::vector<Sequence> coords;
    for (const auto& c : b->coords()) coords.push_back(embed_into(c, S));
    return vector_bundle(std::move(coords), *s.values().vec);
  }
  return Sequence(std::make_shared<EmbedNode>(s.share(), S));
}

Sequence linear_combine(const std::vector<std::pair<Scalar, Sequence>>& terms) {
  if (terms.empty()) throw SeqspaceError("linear_combine: empty term list");
  const ValueSpace& vs = terms[0].second.values();
  for (const auto& [a, t] : terms) {
    if (!t.values().compatible(vs))
      throw MixedValueKinds("linear_combine: incompatible value kinds");
    if (a.mode() != vs.field.mode)
      throw MixedValueKinds("linear_combine: scalar mode mismatch");
  }
  std::vector<std::pair<Scalar, std::shared_ptr<const SeqNode>>> keep;
  for (const auto& [a, t] : terms) {
    if (a.is_zero() || is_zero_node(t.node())) continue;
    keep.emplace_back(a, t.share());
  }
  if (keep.empty()) return zero_sequence(vs);

  // Combinations distribute over coordinate bundles, keeping the scalar
  // structure (envelopes, constants) visible through functionals.
  if (vs.is_vector()) {
    bool all_bundles = true;
    for (const auto& [a, n] : keep)
      all_bundles = all_bundles && dynamic_cast<const VectorBundleNode*>(n.get());
    if (all_bundles) {
      std::vector<Sequence> coords;
      for (uint32_t c = 0; c < vs.dim(); ++c) {
        std::vector<std::pair<Scalar, Sequence>> column;
        for (const auto& [a, n] : keep)
          column.emplace_back(
              a, dynamic_cast<const VectorBundleNode*>(n.get())->coords()[c]);
        coords.push_back(linear_combine(column));
      }
      return vector_bundle(std::move(coords), *vs.vec);
    }
  }
  if (keep.size() == 1) {
    const auto& [a, n] = keep[0];
    if (a == Scalar::one(vs.field.mode)) return Sequence(n);
    // alpha * powlog(a0, b0, c) folds to powlog(a0, b0, alpha*c); the reference
    // factor does not depend on c, so coordinate values match exactly.
    if (const auto* p = dynamic_cast<const PowLogNode*>(n.get());
        p && vs.field.exact())
      return powlog_sequence(p->a(), p->b(), a.rat() * p->c(), vs.field);
  }
  return Sequence(std::make_shared<CombineNode>(std::move(keep), vs));
}

Sequence scale_sequence(const Scalar& a, const Sequence& s) {
  return linear_combine({{a, s}});
}

std::pair<Sequence, Sequence> split_at(const Sequence& s, const IndexSet& S) {
  if (S.infinite()) {
    Sequence u = embed_into(restrict_to(s, S), S);
    Sequence v = embed_into(restrict_to(s, IndexSet::complement_of(S)),
                            IndexSet::complement_of(S));
    return {std::move(u), std::move(v)};
  }
  // Finite S: keep the masked coordinates explicitly.
  const auto sz = *S.finite_size();
  if (sz == 0) return {zero_sequence(s.values()), s};
  std::vector<Value> kept;
  const uint64_t last = S.enumerate(sz);
  kept.reserve(last);
  for (uint64_t j = 1; j <= last; ++j)
    kept.push_back(S.contains(j) ? s.eval(j) : Value::zero(s.values()));
  Sequence u = explicit_sequence(std::move(kept), s.values());
  Sequence v = linear_combine({{Scalar::one(s.values().field.mode), s},
                               {-Scalar::one(s.values().field.mode), u}});
  return {std::move(u), std::move(v)};
}

Sequence functional_image(const Sequence& vector_seq, const std::vector<Rational>& phi) {
  const ValueSpace& vs = vector_seq.values();
  if (!vs.is_vector()) throw MixedValueKinds("functional_image: sequence is scalar");
  if (phi.size() != vs.dim())
    throw MixedValueKinds("functional_image: functional dimension mismatch");
  const ScalarField field = vs.field;
  const SeqNode* n = vector_seq.node();
  if (const auto* bundle = dynamic_cast<const VectorBundleNode*>(n)) {
    std::vector<std::pair<Scalar, Sequence>> terms;
    for (size_t i = 0; i < phi.size(); ++i)
      terms.emplace_back(scalar_from_rational(phi[i], field.mode), bundle->coords()[i]);
    return linear_combine(terms);
  }
  if (const auto* e = dynamic_cast<const EmbedNode*>(n))
    return embed_into(functional_image(Sequence(e->inner_share()), phi), e->set());
  if (const auto* r = dynamic_cast<const RestrictNode*>(n))
    return restrict_to(functional_image(Sequence(r->inner_share()), phi), r->set());
  if (const auto* c = dynamic_cast<const CombineNode*>(n)) {
    std::vector<std::pair<Scalar, Sequence>> terms;
    for (const auto& [a, t] : c->terms())
      terms.emplace_back(a, functional_image(Sequence(t), phi));
    return linear_combine(terms);
  }
  if (is_zero_node(n)) return zero_sequence(ValueSpace{field, std::nullopt});
  return Sequence(std::make_shared<FunctionalImageNode>(vector_seq.share(), phi));
}

Sequence map_sequence(std::function<Value(const Value&)> f, const Sequence& inner,
                      ValueSpace out_space, std::optional<PowLogEnvelope> env,
                      bool preserves_support, std::string label) {
  return Sequence(std::make_shared<MappedNode>(std::move(f), inner.share(),
                                               std::move(out_space), std::move(env),
                                               preserves_support, std::move(label)));
}

std::optional<std::vector<Sequence>> bundle_coordinates(const Sequence& s) {
  if (const auto* b = dynamic_cast<const VectorBundleNode*>(s.node())) return b->coords();
  return std::nullopt;
}

std::optional<Rational> exact_series_sum(const Sequence& s) {
  if (s.values().is_vector() || !s.values().field.exact()) return std::nullopt;
  const auto& t = s.exact_tail();
  if (!t) return std::nullopt;
  if (!(t->ratio.abs() < Rational(1))) return std::nullopt;
  Rational sum(0);
  for (uint64_t j = 1; j < t->start; ++j) sum += s.eval(j).as_scalar().rat();
  Rational block(0);
  for (uint64_t r = 0; r < t->period; ++r)
    block += s.eval(t->start + r).as_scalar().rat();
  return sum + block / (Rational(1) - t->ratio);
}

std::optional<Rational> exact_abs_sum_bound(const Sequence& s) {
  if (s.values().is_vector() || !s.values().field.exact()) return std::nullopt;
  const auto& t = s.exact_tail();
  if (!t) return std::nullopt;
  if (!(t->ratio.abs() < Rational(1))) return std::nullopt;
  Rational sum(0);
  for (uint64_t j = 1; j < t->start; ++j) sum += s.eval(j).as_scalar().rat().abs();
  Rational block(0);
  for (uint64_t r = 0; r < t->period; ++r)
    block += s.eval(t->start + r).as_scalar().rat().abs();
  return sum + block / (Rational(1) - t->ratio.abs());
}

}  // namespace seqspace
