#include "pdc/virasoro.hpp"

#include <functional>
#include <stdexcept>

namespace pdc {

namespace {

DescElement apply_R_monomial(int k, const Monomial& m) {
  DescElement r;
  for (std::size_t pos = 0; pos < m.size(); ++pos) {
    const Generator& g = m.factors()[pos];
    if (pos > 0 && m.factors()[pos - 1] == g) continue;  // repeated factor: counted below
    int target = g.i + k;
    if (target < 0) continue;
    Integer weight = k == -1 ? Integer(1) : rising_product(g.i + g.j - 3, k);
    if (weight == 0) continue;
    Rational c(weight * m.count(g));
    r.add(m.without(pos) * Monomial{Generator(target, g.j)}, c);
  }
  return r;
}

DescElement apply_derivation(const Derivation& d, const DescElement& e) {
  if (!d) return e;
  return apply_R(*d, e);
}

void check_index(int k) {
  if (k < -1) throw std::logic_error("derivation R_" + std::to_string(k) + " is outside the operator class");
}

}  // namespace

DescElement apply_R(int k, const DescElement& e) {
  check_index(k);
  DescElement r;
  for (const auto& [m, c] : e.terms()) r += apply_R_monomial(k, m) * c;
  return r;
}

VirasoroOperator VirasoroOperator::R(int k) {
  check_index(k);
  VirasoroOperator op;
  op.add(Monomial{}, k, 1);
  return op;
}

VirasoroOperator VirasoroOperator::multiplication(const DescElement& x) {
  VirasoroOperator op;
  for (const auto& [m, c] : x.terms()) op.add(m, std::nullopt, c);
  return op;
}

void VirasoroOperator::add(const Monomial& x, Derivation d, const Rational& c) {
  if (pdc::is_zero(c)) return;
  if (d) check_index(*d);
  auto [it, inserted] = t_.try_emplace(Key{x, d}, c);
  if (inserted) return;
  it->second += c;
  if (pdc::is_zero(it->second)) t_.erase(it);
}

VirasoroOperator& VirasoroOperator::operator+=(const VirasoroOperator& o) {
  for (const auto& [key, c] : o.t_) add(key.first, key.second, c);
  return *this;
}

VirasoroOperator& VirasoroOperator::operator-=(const VirasoroOperator& o) {
  for (const auto& [key, c] : o.t_) add(key.first, key.second, -c);
  return *this;
}

VirasoroOperator& VirasoroOperator::operator*=(const Rational& c) {
  if (pdc::is_zero(c)) {
    t_.clear();
    return *this;
  }
  for (auto& [key, x] : t_) x *= c;
  return *this;
}

VirasoroOperator normalized(const VirasoroOperator& op) {
  VirasoroOperator r;
  for (const auto& [key, c] : op.terms()) {
    const DescElement n = normalize(DescElement(key.first, c));
    for (const auto& [m, x] : n.terms()) r.add(m, key.second, x);
  }
  return r;
}

namespace {

// x * M_X o D, where x is an element rather than a monomial.
void add_product(VirasoroOperator& out, const DescElement& x, const Monomial& y, Derivation d, const Rational& c) {
  for (const auto& [m, a] : x.terms()) out.add(m * y, d, a * c);
}

Rational signed_factorial_weight(int a, int b, int dl, int dr) {
  int sign = (dl * dr) % 2 == 0 ? 1 : -1;
  return Rational(factorial(a + dl - 3) * factorial(b + dr - 3) * sign);
}

VirasoroOperator quadratic_terms(int k) {
  VirasoroOperator op;
  for (int a = 0; a <= k + 2; ++a) {
    int b = k + 2 - a;
    for (int r = 0; r <= 2; ++r) {
      int dl = 3 - r;
      int dr = r + 1;
      op.add(Monomial{Generator(a, dl), Generator(b, dr)}, std::nullopt,
             Rational(-2) * signed_factorial_weight(a, b, dl, dr));
    }
  }
  for (int a = 0; a <= k; ++a) {
    int b = k - a;
    op.add(Monomial{Generator(a, 3), Generator(b, 3)}, std::nullopt, Rational(factorial(a) * factorial(b)));
  }
  return op;
}

}  // namespace

VirasoroOperator build_L(int k) {
  check_index(k);
  VirasoroOperator op = quadratic_terms(k);
  op += VirasoroOperator::R(k);
  return op;
}

VirasoroOperator build_calL(int k, CalLRoute route) {
  check_index(k);
  const Rational f(factorial(k + 1));
  const VirasoroOperator m = VirasoroOperator::multiplication(DescElement(Monomial{Generator(k + 1, 3)}));
  if (route == CalLRoute::from_L) return build_L(k) + f * compose(build_L(-1), m);

  // Written out term by term: the three Kunneth summands of ch_a ch_b(H) with
  // (d^L, d^R) = (3,1), (2,2), (1,3), then a!b! ch_a(p) ch_b(p), R_k, and the
  // last term with R_{-1} moved past the multiplication.
  VirasoroOperator op;
  for (int a = 0; a <= k + 2; ++a) {
    int b = k + 2 - a;
    op.add(Monomial{Generator(a, 3), Generator(b, 1)}, std::nullopt,
           Rational(2) * Rational(factorial(a) * factorial(b - 2)));
    op.add(Monomial{Generator(a, 2), Generator(b, 2)}, std::nullopt,
           Rational(-2) * Rational(factorial(a - 1) * factorial(b - 1)));
    op.add(Monomial{Generator(a, 1), Generator(b, 3)}, std::nullopt,
           Rational(2) * Rational(factorial(a - 2) * factorial(b)));
  }
  for (int a = 0; a <= k; ++a)
    op.add(Monomial{Generator(a, 3), Generator(k - a, 3)}, std::nullopt, Rational(factorial(a) * factorial(k - a)));
  op.add(Monomial{}, k, 1);
  if (k >= 0) op.add(Monomial{Generator(k, 3)}, std::nullopt, f);
  op.add(Monomial{Generator(k + 1, 3)}, -1, f);
  return op;
}

VirasoroOperator compose(const VirasoroOperator& a, const VirasoroOperator& b) {
  VirasoroOperator r;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const auto& [x, d1] = ka;
      const auto& [y, d2] = kb;
      const Rational c = ca * cb;
      if (!d1) {
        r.add(x * y, d2, c);
        continue;
      }
      if (d2) throw std::logic_error("composition of two derivations is not a first-order operator");
      // M_X D1 M_Y = M_{X D1(Y)} + M_{XY} D1
      add_product(r, apply_R(*d1, DescElement(y)), x, std::nullopt, c);
      r.add(x * y, d1, c);
    }
  }
  return r;
}

VirasoroOperator commutator(const VirasoroOperator& a, const VirasoroOperator& b) {
  VirasoroOperator r;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      const auto& [x, d1] = ka;
      const auto& [y, d2] = kb;
      const Rational c = ca * cb;
      if (d1) add_product(r, apply_R(*d1, DescElement(y)), x, d2, c);
      if (d2) add_product(r, apply_R(*d2, DescElement(x)), y, d1, -c);
      if (d1 && d2) {
        int k = *d1;
        int m = *d2;
        if (m != k) {
          if (k + m < -1) throw std::logic_error("commutator produced R_" + std::to_string(k + m));
          r.add(x * y, k + m, c * (m - k));
        }
      }
    }
  }
  return r;
}

DescElement apply_formal(const VirasoroOperator& op, const DescElement& e) {
  DescElement r;
  std::map<Derivation, DescElement> cache;
  for (const auto& [key, c] : op.terms()) {
    auto it = cache.find(key.second);
    if (it == cache.end()) it = cache.emplace(key.second, apply_derivation(key.second, e)).first;
    for (const auto& [m, x] : it->second.terms()) r.add(key.first * m, x * c);
  }
  return r;
}

DescElement apply_op(const VirasoroOperator& op, const DescElement& e) { return normalize(apply_formal(op, e)); }

std::vector<Monomial> test_monomials(int max_factors, int bound) {
  std::vector<Generator> gens;
  for (int i = 0; i <= bound; ++i)
    for (int j = 0; j <= 3; ++j) gens.emplace_back(i, j);
  std::vector<Monomial> out;
  std::vector<Generator> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    out.emplace_back(current);
    if (static_cast<int>(current.size()) == max_factors) return;
    for (std::size_t g = start; g < gens.size(); ++g) {
      current.push_back(gens[g]);
      rec(g);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

bool bracket_check(int k, int m, int bound) {
  if (k < -1 || m < -1) throw std::invalid_argument("bracket_check needs k, m >= -1");
  const VirasoroOperator lhs = commutator(build_L(k), build_L(m));
  const VirasoroOperator rhs = k == m ? VirasoroOperator{} : Rational(m - k) * build_L(k + m);
  for (const auto& mono : test_monomials(2, bound)) {
    DescElement d(mono);
    if (!(apply_op(lhs, d) == apply_op(rhs, d))) return false;
  }
  return true;
}

std::string to_string(const VirasoroOperator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : op.terms()) {
    const auto& [x, d] = key;
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string body;
    if (!x.empty()) body = to_string(x);
    if (d) {
      std::string r = "R_" + (*d < 0 ? "{" + std::to_string(*d) + "}" : std::to_string(*d));
      body = body.empty() ? r : body + "*" + r;
    }
    if (body.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += body;
    } else {
      out += to_string(mag) + "*" + body;
    }
  }
  return out;
}

}  // namespace pdc
