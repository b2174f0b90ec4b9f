#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Series = std::vector<Q>;  // c[0] + c[1] x + ... , truncated

inline Q frac(long a, long b) {
  Q r(a, b);
  r.canonicalize();
  return r;
}

inline Q fact(int n) {
  mpz_class r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return Q(r);
}

inline Series mul(const Series& a, const Series& b, std::size_t n) {
  Series r(n, Q(0));
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline Series inv(const Series& a, std::size_t n) {
  Series r(n, Q(0));
  r[0] = 1 / a.at(0);
  for (std::size_t k = 1; k < n; ++k) {
    Q acc = 0;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) acc += a[j] * r[k - j];
    r[k] = -acc * r[0];
  }
  return r;
}

// Power series of num/den by schoolbook long division; den[0] != 0.
inline Series divide(const Series& num, const Series& den, std::size_t n) {
  Series rem = num;
  rem.resize(std::max(n, num.size()) + den.size(), Q(0));
  Series quo(n, Q(0));
  for (std::size_t k = 0; k < n; ++k) {
    quo[k] = rem[k] / den[0];
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= quo[k] * den[j];
  }
  return quo;
}

// 2 - 2 cos u
inline Series two_minus_two_cos(std::size_t n) {
  Series r(n, Q(0));
  for (std::size_t k = 1; 2 * k < n; ++k) r[2 * k] = Q(k % 2 == 1 ? 2 : -2) / fact(static_cast<int>(2 * k));
  return r;
}

// u^2 / (4 sin^2(u/2)) = u^2 / (2 - 2 cos u)
inline Series u2_over_four_sin_sq(std::size_t n) {
  Series t = two_minus_two_cos(n + 2);
  Series shifted(t.begin() + 2, t.end());
  return inv(shifted, n);
}

// Every partition of n, generated recursively with parts <= max_part.
inline void each_partition(int n, int max_part, std::vector<int>& cur,
                           const std::function<void(const std::vector<int>&)>& f) {
  if (n == 0) {
    f(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    each_partition(n - p, p, cur, f);
    cur.pop_back();
  }
}

inline void each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  each_partition(n, n, cur, f);
}

inline Q z_of(const std::vector<int>& mu) {
  Q z = 1;
  std::map<int, int> mult;
  for (int m : mu) {
    z *= m;
    ++mult[m];
  }
  for (auto [k, c] : mult) z *= fact(c);
  return z;
}

// Euler's pentagonal recurrence.
inline std::vector<mpz_class> partition_counts(int n) {
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      mpz_class s = (k % 2 == 1) ? 1 : -1;
      p[m] += s * p[m - g1];
      if (g2 <= m) p[m] += s * p[m - g2];
    }
  }
  return p;
}

// Bell triangle.
inline std::vector<mpz_class> bell_numbers(int n) {
  std::vector<mpz_class> out{1};
  std::vector<mpz_class> row{1};
  for (int k = 1; k <= n; ++k) {
    std::vector<mpz_class> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    out.push_back(row.back());
    row = next;
  }
  return out;
}

// Power series of the degree d local curve contribution, summed over partitions
// with each factor (-q)^m/(1-(-q)^m)^2 = sum_n n (-q)^{mn}.
inline Series local_curve(int d, std::size_t n) {
  Series total(n, Q(0));
  each_partition(d, [&](const std::vector<int>& mu) {
    Series prod(n, Q(0));
    prod[0] = 1;
    for (int m : mu) {
      Series f(n, Q(0));
      for (std::size_t k = 1; k * static_cast<std::size_t>(m) < n; ++k)
        f[k * m] = Q(static_cast<long>(k)) * (((k * m) % 2 == 0) ? 1 : -1);
      prod = mul(prod, f, n);
    }
    Q w = Q(mu.size() % 2 == 0 ? 1 : -1) / z_of(mu);
    for (std::size_t k = 0; k < n; ++k) total[k] += w * prod[k];
  });
  return total;
}

// Verdict of F(1/q) = sign q^{-d_beta} F(q) for F = q^a N(q) / D(q) with N(0), D(0) != 0:
// F(1/q) = q^{-a + deg D - deg N} N^R(q) / D^R(q), so the equation reads
// N^R * D * q^{deg D - deg N - a} == sign * q^{a - d_beta} N * D^R.
inline bool palindromic(int a, const Series& n, const Series& d, int d_beta, int sign) {
  auto rev = [](Series s) {
    std::reverse(s.begin(), s.end());
    return s;
  };
  auto full = [](const Series& x, const Series& y) { return mul(x, y, x.size() + y.size() - 1); };
  Series lhs = full(rev(n), d);
  Series rhs = full(n, rev(d));
  int shift_l = static_cast<int>(d.size()) - static_cast<int>(n.size()) - a;
  int shift_r = a - d_beta;
  std::map<int, Q> l, r;
  for (std::size_t k = 0; k < lhs.size(); ++k)
    if (lhs[k] != 0) l[static_cast<int>(k) + shift_l] = lhs[k];
  for (std::size_t k = 0; k < rhs.size(); ++k)
    if (rhs[k] != 0) r[static_cast<int>(k) + shift_r] = sign * rhs[k];
  return l == r;
}

}  // namespace oracle
