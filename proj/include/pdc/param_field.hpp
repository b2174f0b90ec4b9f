#pragma once

#include "pdc/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace pdc {

// Sparse polynomial over Q in at most four parameters (s1..s3 or lambda0..lambda3).
class MvPolynomial {
 public:
  static constexpr std::size_t kMaxVars = 4;
  using Exponents = std::array<int, kMaxVars>;
  using Terms = std::map<Exponents, Rational>;

  MvPolynomial() = default;
  MvPolynomial(int c) : MvPolynomial(Rational(c)) {}  // NOLINT
  MvPolynomial(const Rational& c);                    // NOLINT
  static MvPolynomial variable(std::size_t index);
  static MvPolynomial monomial(const Exponents& e, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; meaningful when is_constant().
  Rational constant() const;
  /// Largest term in lex order on exponent vectors.
  const Terms::value_type& leading() const { return *terms_.rbegin(); }

  MvPolynomial& operator+=(const MvPolynomial& o);
  MvPolynomial& operator-=(const MvPolynomial& o);
  MvPolynomial& operator*=(const Rational& c);
  friend MvPolynomial operator+(MvPolynomial a, const MvPolynomial& b) { return a += b; }
  friend MvPolynomial operator-(MvPolynomial a, const MvPolynomial& b) { return a -= b; }
  friend MvPolynomial operator-(MvPolynomial a) { return a *= Rational(-1); }
  friend MvPolynomial operator*(const MvPolynomial& a, const MvPolynomial& b);
  friend bool operator==(const MvPolynomial& a, const MvPolynomial& b) = default;

  /// Exact quotient a / b, or nullopt when b does not divide a.
  static std::optional<MvPolynomial> divide_exact(const MvPolynomial& a, const MvPolynomial& b);

  std::string to_string(std::span<const std::string_view> names) const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  Terms terms_;
};

// Element of Q(x1..x4) stored as num/den with integer coefficients whose joint
// content is 1, no common monomial factor, and a positive leading denominator
// coefficient. Polynomial gcds are not computed, so equality goes through
// cross-multiplication.
class ParamFraction {
 public:
  ParamFraction() : den_(1) {}
  ParamFraction(int c) : ParamFraction(Rational(c)) {}  // NOLINT
  ParamFraction(const Rational& c) : num_(c), den_(1) { normalize(); }  // NOLINT
  ParamFraction(MvPolynomial num) : num_(std::move(num)), den_(1) { normalize(); }  // NOLINT
  ParamFraction(MvPolynomial num, MvPolynomial den);

  static ParamFraction variable(std::size_t index) { return ParamFraction(MvPolynomial::variable(index)); }

  const MvPolynomial& num() const { return num_; }
  const MvPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  ParamFraction& operator+=(const ParamFraction& o);
  ParamFraction& operator-=(const ParamFraction& o);
  ParamFraction& operator*=(const ParamFraction& o);
  ParamFraction& operator/=(const ParamFraction& o);
  friend ParamFraction operator+(ParamFraction a, const ParamFraction& b) { return a += b; }
  friend ParamFraction operator-(ParamFraction a, const ParamFraction& b) { return a -= b; }
  friend ParamFraction operator*(ParamFraction a, const ParamFraction& b) { return a *= b; }
  friend ParamFraction operator/(ParamFraction a, const ParamFraction& b) { return a /= b; }
  friend ParamFraction operator-(const ParamFraction& a);
  friend bool operator==(const ParamFraction& a, const ParamFraction& b);

  std::string to_string(std::span<const std::string_view> names) const;

 private:
  void normalize();
  MvPolynomial num_;
  MvPolynomial den_;
};

inline bool is_zero(const ParamFraction& x) { return x.is_zero(); }

}  // namespace pdc
