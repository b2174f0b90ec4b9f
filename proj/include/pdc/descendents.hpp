#pragma once

#include "pdc/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pdc {

// ch_i(H^j) on P^3; j = 0, 1, 2, 3 stand for 1, H, L, p.
struct Generator {
  int i = 0;
  int j = 0;

  Generator() = default;
  Generator(int i_, int j_);

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// tau_k(H^j) = ch_{k+2}(H^j).
Generator from_tau(int k, int j);

// Commutative product of generators, factors kept sorted by (i, j).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Generator> factors);
  Monomial(std::initializer_list<Generator> factors) : Monomial(std::vector<Generator>(factors)) {}

  const std::vector<Generator>& factors() const { return f_; }
  bool empty() const { return f_.empty(); }
  std::size_t size() const { return f_.size(); }
  int count(const Generator& g) const;
  /// The monomial with the factor at position k removed.
  Monomial without(std::size_t k) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Generator> f_;
};

/// Sum of i + j - 3 over the factors.
int degree(const Monomial& m);

// Finite Q-linear combination of monomials with no zero terms.
class DescElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  DescElement() = default;
  DescElement(const Monomial& m, const Rational& c = 1);  // NOLINT
  static DescElement constant(const Rational& c) { return DescElement(Monomial{}, c); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational coeff(const Monomial& m) const;
  /// Adds c*m; does nothing when c = 0.
  void add(const Monomial& m, const Rational& c);

  DescElement& operator+=(const DescElement& o);
  DescElement& operator-=(const DescElement& o);
  DescElement& operator*=(const Rational& c);
  friend DescElement operator+(DescElement a, const DescElement& b) { return a += b; }
  friend DescElement operator-(DescElement a, const DescElement& b) { return a -= b; }
  friend DescElement operator-(DescElement a) { return a *= Rational(-1); }
  friend DescElement operator*(DescElement a, const Rational& c) { return a *= c; }
  friend DescElement operator*(const Rational& c, DescElement a) { return a *= c; }
  friend DescElement operator*(const DescElement& a, const DescElement& b);
  friend bool operator==(const DescElement&, const DescElement&) = default;

 private:
  Terms t_;
};

/// ch_0(p) -> -1, ch_0(H^j) for j < 3 -> 0, ch_1(H^j) -> 0.
DescElement normalize(const DescElement& e);

/// ch_a ch_b(H^j) = sum_{r=0}^{3-j} ch_a(H^{r+j}) ch_b(H^{3-r}).
DescElement kunneth_expand(int a, int b, int j);

/// Class name of H^j: "1", "H", "L", "p".
std::string_view class_name(int j);

std::string to_string(const Generator& g);
std::string to_string(const Monomial& m);
std::string to_string(const DescElement& e);

/// Parses sums of products of ch_i(...) / tau_k(...) with rational coefficients,
/// e.g. "ch3(H)*ch3(p) - 1/2*tau0(p)^2". Throws ParseError.
DescElement parse_desc(std::string_view text);

/// parse_desc for input that must be a single monomial with coefficient 1.
Monomial parse_monomial(std::string_view text);

}  // namespace pdc
