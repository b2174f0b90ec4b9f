#pragma once

#include "pdc/laurent.hpp"
#include "pdc/rational_function.hpp"

#include <type_traits>

namespace pdc {

/// Laurent expansion of F in q through q^max_exp; the result is exact below max_exp + 1.
template <CoefficientField K>
LaurentSeries<K> laurent_expand(const RationalFunction<K>& f, int max_exp) {
  const int order = max_exp + 1;
  if (f.is_zero()) return LaurentSeries<K>::zero(SeriesVariable::q, order);
  const int a = f.num().order();
  const int b = f.den().order();
  const Polynomial<K> num = f.num().shifted(-a);
  const Polynomial<K> den = f.den().shifted(-b);  // constant term 1 in canonical form
  const int min_exp = a - b;
  const int count = order - min_exp;
  if (count <= 0) return LaurentSeries<K>(SeriesVariable::q, min_exp, {}, order);
  const K inv0 = K(1) / den.coeff(0);
  std::vector<K> s(static_cast<std::size_t>(count), K(0));
  for (int n = 0; n < count; ++n) {
    K acc = num.coeff(n);
    for (int k = 1; k <= n && k <= den.degree(); ++k) acc = acc - den.coeff(k) * s[static_cast<std::size_t>(n - k)];
    s[static_cast<std::size_t>(n)] = acc * inv0;
  }
  return LaurentSeries<K>(SeriesVariable::q, min_exp, std::move(s), order);
}

/// F(1/q) == sign * q^{-d_beta} * F(q), exactly.
template <CoefficientField K>
bool fe_check(const RationalFunction<K>& f, int d_beta, int sign) {
  return f.invert_q() == f.times_q_power(-d_beta).scaled(K(sign));
}

/// True iff den(F) divides q^a * prod_{m=1}^{d} (1-(-q)^m)^{b_m} for some a, b_m >= 0.
/// Strips, by exact division, the part of the denominator shared with the allowed
/// product until nothing more can be removed.
template <CoefficientField K>
bool pole_check(const RationalFunction<K>& f, int d) {
  Polynomial<K> rest = f.den().shifted(-f.den().order());
  Polynomial<K> allowed = Polynomial<K>::constant(K(1));
  for (int m = 1; m <= d; ++m) allowed = allowed * one_minus_neg_q_pow<K>(m);
  while (rest.degree() > 0) {
    Polynomial<K> g = gcd(rest, allowed);
    if (g.degree() <= 0) return false;
    rest = Polynomial<K>::divmod(rest, g).first;
  }
  return true;
}

namespace detail {

/// sum_n scale^n u^n / (n + offset)! to the given precision.
inline LaurentSeries<GaussianRational> exp_like(const GaussianRational& scale, int offset, int precision) {
  std::vector<GaussianRational> c;
  c.reserve(static_cast<std::size_t>(precision));
  GaussianRational power(1);
  for (int n = 0; n < precision; ++n) {
    c.push_back(power / GaussianRational(Rational(factorial(n + offset))));
    power *= scale;
  }
  return {SeriesVariable::u, 0, std::move(c), precision};
}

inline int strip_one_plus_q(Polynomial<GaussianRational>& p) {
  const Polynomial<GaussianRational> one_plus_q(std::vector<GaussianRational>{GaussianRational(1), GaussianRational(1)});
  int mult = 0;
  while (p.degree() > 0) {
    auto quo = Polynomial<GaussianRational>::divide_exact(p, one_plus_q);
    if (!quo) break;
    p = std::move(*quo);
    ++mult;
  }
  return mult;
}

}  // namespace detail

/// Laurent expansion at u = 0 of exp(-i d_beta u / 2) F(-exp(iu)), through u^order.
/// The exponential prefactor stands for (-q)^{-d_beta/2} for either parity of d_beta.
template <CoefficientField K>
  requires(std::is_same_v<K, Rational> || std::is_same_v<K, GaussianRational>)
LaurentSeries<GaussianRational> u_expand(const RationalFunction<K>& f, int d_beta, int order) {
  using G = GaussianRational;
  const auto u = SeriesVariable::u;
  const int out_order = order + 1;
  if (f.is_zero()) return LaurentSeries<G>::zero(u, out_order);

  auto to_g = [](const K& x) { return G(x); };
  Polynomial<G> num = f.num().map(to_g);
  Polynomial<G> den = f.den().map(to_g);
  // q = -1 sits at u = 0; its multiplicities fix the leading exponent.
  const int lead = detail::strip_one_plus_q(num) - detail::strip_one_plus_q(den);
  const int rel = out_order - lead;
  if (rel <= 0) return LaurentSeries<G>::zero(u, out_order);

  // q(u) = -exp(iu)
  const LaurentSeries<G> q_of_u = detail::exp_like(G::i(), 0, rel).scaled(G(-1));
  auto evaluate = [&](const Polynomial<G>& p) {
    LaurentSeries<G> s = LaurentSeries<G>::zero(u, rel);
    for (int k = p.degree(); k >= 0; --k) s = s * q_of_u + LaurentSeries<G>(u, 0, {p.coeff(k)}, rel);
    return s;
  };
  // (1 + q(u)) / u = -i sum_n (iu)^n / (n+1)!
  const LaurentSeries<G> one_plus_q_over_u = detail::exp_like(G::i(), 1, rel).scaled(-G::i());
  const LaurentSeries<G> prefactor = detail::exp_like(G(Rational(-d_beta) / 2) * G::i(), 0, rel);

  LaurentSeries<G> r = one_plus_q_over_u.pow(lead) * evaluate(num) * evaluate(den).inverse() * prefactor;
  return r.truncated(rel).shifted(lead);
}

}  // namespace pdc
