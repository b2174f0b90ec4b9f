#pragma once

#include "pdc/descendents.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace pdc {

/// R_k on a formal element, extended to products by the Leibniz rule. ch_{-1} = 0.
DescElement apply_R(int k, const DescElement& e);

// A derivation slot: nullopt is the identity, otherwise R_k with k >= -1.
using Derivation = std::optional<int>;

// Sum of c * M_X o D: multiply by the formal monomial X after applying D.
class VirasoroOperator {
 public:
  using Key = std::pair<Monomial, Derivation>;
  using Terms = std::map<Key, Rational>;

  VirasoroOperator() = default;

  static VirasoroOperator R(int k);
  static VirasoroOperator multiplication(const DescElement& x);

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const Monomial& x, Derivation d, const Rational& c);

  VirasoroOperator& operator+=(const VirasoroOperator& o);
  VirasoroOperator& operator-=(const VirasoroOperator& o);
  VirasoroOperator& operator*=(const Rational& c);
  friend VirasoroOperator operator+(VirasoroOperator a, const VirasoroOperator& b) { return a += b; }
  friend VirasoroOperator operator-(VirasoroOperator a, const VirasoroOperator& b) { return a -= b; }
  friend VirasoroOperator operator*(const Rational& c, VirasoroOperator a) { return a *= c; }
  friend bool operator==(const VirasoroOperator&, const VirasoroOperator&) = default;

 private:
  Terms t_;
};

/// Multiplier monomials normalized; the derivations are untouched.
VirasoroOperator normalized(const VirasoroOperator& op);

/// L_k: quadratic ch_a ch_b(H) and ch_a ch_b(p) terms plus R_k.
VirasoroOperator build_L(int k);

enum class CalLRoute { definition, from_L };

/// The operator annihilating descendent series: L_k + (k+1)! R_{-1} ch_{k+1}(p).
VirasoroOperator build_calL(int k, CalLRoute route = CalLRoute::definition);

/// A o B. Throws std::logic_error when a product of two derivations would appear.
VirasoroOperator compose(const VirasoroOperator& a, const VirasoroOperator& b);

/// [A, B] using [R_k, R_m] = (m-k) R_{k+m} and [D, M_X] = M_{D(X)}.
VirasoroOperator commutator(const VirasoroOperator& a, const VirasoroOperator& b);

/// Action on formal symbols, without normalization.
DescElement apply_formal(const VirasoroOperator& op, const DescElement& e);

/// normalize(apply_formal(op, e)).
DescElement apply_op(const VirasoroOperator& op, const DescElement& e);

/// All monomials with at most max_factors generators ch_i(H^j), i <= bound,
/// including the empty monomial.
std::vector<Monomial> test_monomials(int max_factors, int bound);

/// [L_k, L_m] and (m-k) L_{k+m} agree after normalization on test_monomials(2, bound).
bool bracket_check(int k, int m, int bound);

std::string to_string(const VirasoroOperator& op);

}  // namespace pdc
