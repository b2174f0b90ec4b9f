#pragma once

#include "pdc/gaussian.hpp"
#include "pdc/param_field.hpp"
#include "pdc/rational.hpp"

#include <algorithm>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pdc {

/// The coefficient fields a Polynomial may be built over.
template <class K>
concept CoefficientField = requires(const K& a, const K& b) {
  { K(0) };
  { K(1) };
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

// Dense univariate polynomial in q, coefficients in ascending powers.
template <CoefficientField K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const K& c) { return Polynomial(std::vector<K>{c}); }
  static Polynomial monomial(const K& c, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent in polynomial");
    std::vector<K> v(static_cast<std::size_t>(exponent) + 1, K(0));
    v.back() = c;
    return Polynomial(std::move(v));
  }
  static Polynomial q() { return monomial(K(1), 1); }

  const std::vector<K>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int order() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!pdc::is_zero(c_[k])) return static_cast<int>(k);
    return -1;
  }
  K coeff(int n) const { return n < 0 || n > degree() ? K(0) : c_[static_cast<std::size_t>(n)]; }
  const K& leading() const { return c_.back(); }
  const K& lowest() const { return c_[static_cast<std::size_t>(order())]; }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const K& s) {
    if (pdc::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x = x * s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= K(-1); }
  friend Polynomial operator*(Polynomial a, const K& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (pdc::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      if (!(a.c_[k] == b.c_[k])) return false;
    return true;
  }

  /// Euclidean division: a = quotient * b + remainder, deg remainder < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<K> rem = a.c_;
    std::vector<K> quo(rem.size() - b.c_.size() + 1, K(0));
    const K& lead = b.leading();
    for (int k = a.degree(); k >= b.degree(); --k) {
      const K& top = rem[static_cast<std::size_t>(k)];
      if (pdc::is_zero(top)) continue;
      K f = top / lead;
      std::size_t shift = static_cast<std::size_t>(k - b.degree());
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] = rem[shift + j] - f * b.c_[j];
      quo[shift] = std::move(f);
    }
    rem.resize(b.c_.size() - 1);
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  /// Quotient if b divides a exactly.
  static std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    auto [quo, rem] = divmod(a, b);
    if (!rem.is_zero()) return std::nullopt;
    return quo;
  }

  /// Multiplies by q^n for n >= 0, divides by q^{-n} for n < 0 (must be exact).
  Polynomial shifted(int n) const {
    if (is_zero() || n == 0) return *this;
    if (n > 0) {
      std::vector<K> v(static_cast<std::size_t>(n), K(0));
      v.insert(v.end(), c_.begin(), c_.end());
      return Polynomial(std::move(v));
    }
    if (order() < -n) throw std::domain_error("inexact division by a power of q");
    return Polynomial(std::vector<K>(c_.begin() + (-n), c_.end()));
  }

  /// q^{deg} p(1/q).
  Polynomial reversed() const { return Polynomial(std::vector<K>(c_.rbegin(), c_.rend())); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> v;
    v.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * K(static_cast<int>(k)));
    return Polynomial(std::move(v));
  }

  template <class F>
  auto map(F&& f) const {
    using R = std::decay_t<decltype(f(std::declval<const K&>()))>;
    std::vector<R> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(f(x));
    return Polynomial<R>(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && pdc::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

/// Monic gcd over the coefficient field; gcd(0, 0) = 0.
template <CoefficientField K>
Polynomial<K> gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    auto r = Polynomial<K>::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  K lead = a.leading();
  return a * (K(1) / lead);
}

/// (1 - (-q)^m) as a polynomial.
template <CoefficientField K>
Polynomial<K> one_minus_neg_q_pow(int m) {
  return Polynomial<K>::constant(K(1)) - Polynomial<K>::monomial(K(m % 2 == 0 ? 1 : -1), m);
}

/// (1 + q)^n.
template <CoefficientField K>
Polynomial<K> one_plus_q_pow(int n) {
  Polynomial<K> base(std::vector<K>{K(1), K(1)});
  Polynomial<K> r = Polynomial<K>::constant(K(1));
  for (int k = 0; k < n; ++k) r = r * base;
  return r;
}

}  // namespace pdc
