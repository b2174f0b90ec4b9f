#pragma once

#include "pdc/polynomial.hpp"

namespace pdc {

// num/den in lowest terms with den's lowest-order nonzero coefficient equal to 1,
// so (1+q)^3 and q^3 are kept as written.
template <CoefficientField K>
class RationalFunction {
 public:
  using Poly = Polynomial<K>;

  RationalFunction() : den_(Poly::constant(K(1))) {}
  RationalFunction(Poly num) : num_(std::move(num)), den_(Poly::constant(K(1))) {}  // NOLINT
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  static RationalFunction constant(const K& c) { return RationalFunction(Poly::constant(c)); }
  static RationalFunction q_power(int n) {
    return n >= 0 ? RationalFunction(Poly::monomial(K(1), n)) : RationalFunction(Poly::constant(K(1)), Poly::monomial(K(1), -n));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction& operator+=(const RationalFunction& o) {
    if (den_ == o.den_) {
      num_ += o.num_;
    } else {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
    }
    canonicalize();
    return *this;
  }
  RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
  RationalFunction& operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
  }
  RationalFunction& operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    canonicalize();
    return *this;
  }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(RationalFunction a) {
    a.num_ = -a.num_;
    return a;
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// c * F; stays canonical without another gcd.
  RationalFunction scaled(const K& c) const {
    RationalFunction r = *this;
    r.num_ *= c;
    if (r.num_.is_zero()) r.den_ = Poly::constant(K(1));
    return r;
  }

  /// q^n * F.
  RationalFunction times_q_power(int n) const { return *this * q_power(n); }

  /// F(1/q), with powers of q cleared.
  RationalFunction invert_q() const {
    if (is_zero()) return *this;
    Poly n = num_.reversed();
    Poly d = den_.reversed();
    int shift = den_.degree() - num_.degree();
    if (shift >= 0) {
      n = n.shifted(shift);
    } else {
      d = d.shifted(-shift);
    }
    return RationalFunction(std::move(n), std::move(d));
  }

  /// q dF/dq.
  RationalFunction q_ddq() const {
    Poly n = (num_.derivative() * den_ - num_ * den_.derivative()).shifted(1);
    return RationalFunction(std::move(n), den_ * den_);
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using R = std::decay_t<decltype(f(std::declval<const K&>()))>;
    return RationalFunction<R>(num_.map(f), den_.map(f));
  }

 private:
  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num_.is_zero()) {
      den_ = Poly::constant(K(1));
      return;
    }
    if (den_.degree() > 0) {
      Poly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = Poly::divmod(num_, g).first;
        den_ = Poly::divmod(den_, g).first;
      }
    }
    K low = den_.lowest();
    if (!(low == K(1))) {
      K inv = K(1) / low;
      num_ *= inv;
      den_ *= inv;
    }
  }

  Poly num_;
  Poly den_;
};

}  // namespace pdc
