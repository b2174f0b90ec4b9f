#pragma once

#include "pdc/polynomial.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <vector>

namespace pdc {

enum class SeriesVariable { q, u };

// Truncated Laurent series sum_{n >= min_exp} c_n x^n, exact for exponents below
// order(); nothing is known at or above order().
template <CoefficientField K>
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(SeriesVariable var, int min_exp, std::vector<K> coeffs, int order)
      : var_(var), min_exp_(min_exp), c_(std::move(coeffs)), order_(order) {
    normalize();
  }

  static LaurentSeries zero(SeriesVariable var, int order) { return LaurentSeries(var, 0, {}, order); }
  static LaurentSeries one(SeriesVariable var, int order) { return LaurentSeries(var, 0, {K(1)}, order); }

  SeriesVariable variable() const { return var_; }
  int min_exp() const { return min_exp_; }
  int order() const { return order_; }
  const std::vector<K>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// First exponent with a nonzero coefficient; order() for the zero series.
  int valuation() const { return c_.empty() ? order_ : min_exp_; }

  K coeff(int n) const {
    if (n >= order_) throw std::out_of_range("coefficient beyond truncation order");
    int k = n - min_exp_;
    return k < 0 || k >= static_cast<int>(c_.size()) ? K(0) : c_[static_cast<std::size_t>(k)];
  }

  LaurentSeries truncated(int order) const {
    return LaurentSeries(var_, min_exp_, c_, std::min(order, order_));
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    int order = std::min(a.order_, b.order_);
    int lo = std::min(a.valuation(), b.valuation());
    if (lo >= order) return zero(a.var_, order);
    std::vector<K> v(static_cast<std::size_t>(order - lo), K(0));
    for (int n = lo; n < order; ++n) v[static_cast<std::size_t>(n - lo)] = a.coeff(n) + b.coeff(n);
    return LaurentSeries(a.var_, lo, std::move(v), order);
  }
  friend LaurentSeries operator-(const LaurentSeries& a) {
    LaurentSeries r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    int order = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
    if (a.is_zero() || b.is_zero()) return zero(a.var_, order);
    int lo = a.min_exp_ + b.min_exp_;
    if (lo >= order) return zero(a.var_, order);
    std::vector<K> v(static_cast<std::size_t>(order - lo), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        std::size_t k = i + j;
        if (k >= v.size()) break;
        v[k] = v[k] + a.c_[i] * b.c_[j];
      }
    }
    return LaurentSeries(a.var_, lo, std::move(v), order);
  }

  LaurentSeries scaled(const K& s) const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = x * s;
    r.normalize();
    return r;
  }

  /// x^n * S.
  LaurentSeries shifted(int n) const { return LaurentSeries(var_, min_exp_ + n, c_, order_ + n); }

  /// 1/S; requires a known nonzero leading coefficient.
  LaurentSeries inverse() const {
    if (c_.empty()) throw std::domain_error("inverse of a series with no known nonzero term");
    int v = min_exp_;
    int rel = order_ - v;
    std::vector<K> inv(static_cast<std::size_t>(rel), K(0));
    K lead_inv = K(1) / c_[0];
    inv[0] = lead_inv;
    for (int n = 1; n < rel; ++n) {
      K acc(0);
      for (int k = 1; k <= n && k < static_cast<int>(c_.size()); ++k)
        acc = acc + c_[static_cast<std::size_t>(k)] * inv[static_cast<std::size_t>(n - k)];
      inv[static_cast<std::size_t>(n)] = -(acc * lead_inv);
    }
    return LaurentSeries(var_, -v, std::move(inv), rel - v);
  }

  LaurentSeries pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    LaurentSeries r = one(var_, INT_MAX / 4);
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.var_ != b.var_ || a.order_ != b.order_ || a.min_exp_ != b.min_exp_ || a.c_.size() != b.c_.size())
      return false;
    for (std::size_t k = 0; k < a.c_.size(); ++k)
      if (!(a.c_[k] == b.c_[k])) return false;
    return true;
  }

  /// Same coefficients below min(order, a.order(), b.order()).
  static bool agree_below(const LaurentSeries& a, const LaurentSeries& b, int order) {
    order = std::min({order, a.order_, b.order_});
    for (int n = std::min(a.valuation(), b.valuation()); n < order; ++n)
      if (!(a.coeff(n) == b.coeff(n))) return false;
    return true;
  }

 private:
  void normalize() {
    int keep = std::max(0, order_ - min_exp_);
    if (static_cast<int>(c_.size()) > keep) c_.resize(static_cast<std::size_t>(keep));
    std::size_t lead = 0;
    while (lead < c_.size() && pdc::is_zero(c_[lead])) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      min_exp_ = 0;
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      min_exp_ += static_cast<int>(lead);
    }
    while (!c_.empty() && pdc::is_zero(c_.back())) c_.pop_back();
  }

  SeriesVariable var_ = SeriesVariable::q;
  int min_exp_ = 0;
  std::vector<K> c_;
  int order_ = 0;
};

}  // namespace pdc
