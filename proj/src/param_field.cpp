#include "pdc/param_field.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdc {

MvPolynomial::MvPolynomial(const Rational& c) {
  if (!pdc::is_zero(c)) terms_.emplace(Exponents{}, c);
}

MvPolynomial MvPolynomial::variable(std::size_t index) {
  if (index >= kMaxVars) throw std::out_of_range("parameter index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(e, Rational(1));
}

MvPolynomial MvPolynomial::monomial(const Exponents& e, const Rational& c) {
  MvPolynomial p;
  p.add_term(e, c);
  return p;
}

bool MvPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational MvPolynomial::constant() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void MvPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (pdc::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (pdc::is_zero(it->second)) terms_.erase(it);
  }
}

MvPolynomial& MvPolynomial::operator+=(const MvPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MvPolynomial& MvPolynomial::operator-=(const MvPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

MvPolynomial& MvPolynomial::operator*=(const Rational& c) {
  if (pdc::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MvPolynomial operator*(const MvPolynomial& a, const MvPolynomial& b) {
  MvPolynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MvPolynomial::Exponents e;
      for (std::size_t k = 0; k < MvPolynomial::kMaxVars; ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, Rational(ca * cb));
    }
  }
  return r;
}

std::optional<MvPolynomial> MvPolynomial::divide_exact(const MvPolynomial& a, const MvPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  MvPolynomial quotient;
  MvPolynomial rem = a;
  const auto& [lb_exp, lb_coef] = b.leading();
  while (!rem.is_zero()) {
    const auto& [lr_exp, lr_coef] = rem.leading();
    Exponents e;
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      e[k] = lr_exp[k] - lb_exp[k];
      if (e[k] < 0) return std::nullopt;
    }
    MvPolynomial t = monomial(e, Rational(lr_coef / lb_coef));
    quotient += t;
    rem -= t * b;
  }
  return quotient;
}

std::string MvPolynomial::to_string(std::span<const std::string_view> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < kMaxVars; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += k < names.size() ? std::string(names[k]) : "x" + std::to_string(k);
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? "-" : "+";
    }
    if (mono.empty()) {
      out += pdc::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += pdc::to_string(mag) + "*" + mono;
    }
    first = false;
  }
  return out;
}

ParamFraction::ParamFraction(MvPolynomial num, MvPolynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero");
  normalize();
}

void ParamFraction::normalize() {
  if (num_.is_zero()) {
    den_ = MvPolynomial(1);
    return;
  }
  // Common monomial factor.
  MvPolynomial::Exponents low;
  low.fill(1 << 30);
  for (const auto* p : {&num_, &den_})
    for (const auto& [e, c] : p->terms())
      for (std::size_t k = 0; k < MvPolynomial::kMaxVars; ++k) low[k] = std::min(low[k], e[k]);
  if (low != MvPolynomial::Exponents{}) {
    auto strip = [&](const MvPolynomial& p) {
      MvPolynomial r;
      for (const auto& [e, c] : p.terms()) {
        MvPolynomial::Exponents f;
        for (std::size_t k = 0; k < MvPolynomial::kMaxVars; ++k) f[k] = e[k] - low[k];
        r += MvPolynomial::monomial(f, c);
      }
      return r;
    };
    num_ = strip(num_);
    den_ = strip(den_);
  }
  if (!den_.is_constant()) {
    if (auto q = MvPolynomial::divide_exact(num_, den_)) {
      num_ = std::move(*q);
      den_ = MvPolynomial(1);
    } else if (auto r = MvPolynomial::divide_exact(den_, num_)) {
      num_ = MvPolynomial(1);
      den_ = std::move(*r);
    }
  }
  // Integer-cleared content.
  Integer lcm_den = 1;
  for (const auto* p : {&num_, &den_})
    for (const auto& [e, c] : p->terms()) lcm_den = lcm(lcm_den, Integer(c.get_den()));
  Integer g = 0;
  for (const auto* p : {&num_, &den_})
    for (const auto& [e, c] : p->terms()) g = gcd(g, Integer(c.get_num() * (lcm_den / c.get_den())));
  Rational scale = Rational(lcm_den) / Rational(g);
  if (sgn(den_.leading().second) < 0) scale = -scale;
  num_ *= scale;
  den_ *= scale;
}

ParamFraction& ParamFraction::operator+=(const ParamFraction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

ParamFraction& ParamFraction::operator-=(const ParamFraction& o) { return *this += -o; }

ParamFraction& ParamFraction::operator*=(const ParamFraction& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

ParamFraction& ParamFraction::operator/=(const ParamFraction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

ParamFraction operator-(const ParamFraction& a) {
  ParamFraction r = a;
  r.num_ *= Rational(-1);
  return r;
}

bool operator==(const ParamFraction& a, const ParamFraction& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string ParamFraction::to_string(std::span<const std::string_view> names) const {
  std::string n = num_.to_string(names);
  if (den_ == MvPolynomial(1)) return n;
  std::string d = den_.to_string(names);
  if (num_.terms().size() > 1) n = "(" + n + ")";
  if (den_.terms().size() > 1 || !den_.is_constant()) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace pdc
