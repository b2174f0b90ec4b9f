#include <doctest.h>

#include "pdc/virasoro.hpp"

#include <random>

using namespace pdc;

namespace {

DescElement d(std::string_view text) { return parse_desc(text); }

VirasoroOperator M(std::string_view text) { return VirasoroOperator::multiplication(d(text)); }

Rational fact_or_zero(int n) { return n < 0 ? Rational(0) : Rational(factorial(n)); }

}  // namespace

TEST_CASE("apply_R examples") {
  CHECK(apply_R(1, d("ch3(p)")) == d("12*ch4(p)"));
  CHECK(apply_R(-1, d("ch3(p)")) == d("ch2(p)"));
  CHECK(apply_R(0, d("ch2(H)")).is_zero());
  CHECK(apply_R(-1, d("ch0(L)")).is_zero());
  CHECK(apply_R(0, d("ch3(p)^2")) == d("6*ch3(p)^2"));
  CHECK_THROWS_AS(apply_R(-2, d("ch3(p)")), std::logic_error);
}

TEST_CASE("apply_R is a derivation") {
  std::mt19937 rng(37);
  auto pick = [&] {
    std::vector<Generator> g;
    for (int n = static_cast<int>(rng() % 3); n >= 0; --n)
      g.emplace_back(static_cast<int>(rng() % 9), static_cast<int>(rng() % 4));
    return DescElement(Monomial(g));
  };
  for (int t = 0; t < 80; ++t) {
    DescElement x = pick(), y = pick();
    for (int k = -1; k <= 3; ++k) CHECK(apply_R(k, x * y) == apply_R(k, x) * y + x * apply_R(k, y));
  }
}

TEST_CASE("[R_k, R_m] on generators") {
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 3; ++j) {
      DescElement g(Monomial{{i, j}});
      for (int k = -1; k <= 4; ++k) {
        for (int m = -1; m <= 4; ++m) {
          if (k + m < -1) continue;
          if (i == 0 && (k == -1 || m == -1)) continue;  // ch_{-1} = 0 truncates one side
          DescElement lhs = apply_R(k, apply_R(m, g)) - apply_R(m, apply_R(k, g));
          CHECK(lhs == apply_R(k + m, g) * Rational(m - k));
        }
      }
    }
  }
}

TEST_CASE("L operators") {
  CHECK(build_L(-1) == VirasoroOperator::R(-1));
  CHECK(build_L(0) - VirasoroOperator::R(0) == M("4*ch0(p)*ch2(H) - 2*ch1(L)^2 + ch0(p)^2"));

  // Quadratic part of L_1 from the weights -1/2 (-1)^{dl dr} (a+dl-3)! (b+dr-3)! of 4H
  // and a!b! of 24p / 24.
  DescElement expected;
  for (int a = 0; a <= 3; ++a) {
    int b = 3 - a;
    for (int r = 0; r <= 2; ++r) {
      int dl = 3 - r, dr = r + 1;
      Rational w = Rational(-2) * ((dl * dr) % 2 ? -1 : 1) * fact_or_zero(a + dl - 3) * fact_or_zero(b + dr - 3);
      expected.add(Monomial{{a, dl}, {b, dr}}, w);
    }
  }
  for (int a = 0; a <= 1; ++a) expected.add(Monomial{{a, 3}, {1 - a, 3}}, fact_or_zero(a) * fact_or_zero(1 - a));
  CHECK(build_L(1) - VirasoroOperator::R(1) == VirasoroOperator::multiplication(expected));
}

TEST_CASE("calligraphic L operators") {
  VirasoroOperator rm1 = VirasoroOperator::R(-1);
  CHECK(build_calL(-1) == rm1 + compose(rm1, M("ch0(p)")));
  CHECK(normalized(build_calL(0)) == VirasoroOperator::R(0) + M("-4*ch2(H)"));
  CHECK(normalized(build_calL(1)) == VirasoroOperator::R(1) + compose(M("2*ch2(p)"), rm1) + M("-4*ch3(H)"));
  CHECK(apply_op(build_calL(1), d("ch3(p)")) == d("-4*ch3(H)*ch3(p) + 12*ch4(p) + 2*ch2(p)^2"));
  CHECK(apply_op(VirasoroOperator::R(0), d("ch3(H)*ch3(p)")) == d("4*ch3(H)*ch3(p)"));
  CHECK(to_string(compose(M("2*ch2(p)"), rm1)) == "2*ch2(p)*R_{-1}");
}

TEST_CASE("both constructions of calligraphic L agree") {
  auto monos = test_monomials(2, 8);
  for (int k = -1; k <= 4; ++k) {
    VirasoroOperator a = build_calL(k, CalLRoute::definition);
    VirasoroOperator b = build_calL(k, CalLRoute::from_L);
    CHECK(a == b);
    for (const auto& m : monos) CHECK(apply_op(a, m) == apply_op(b, m));
  }
}

TEST_CASE("calL_{-1} annihilates") {
  VirasoroOperator op = build_calL(-1);
  for (const auto& m : test_monomials(2, 6)) CHECK(apply_op(op, m).is_zero());
}

TEST_CASE("calL_k raises degree by k") {
  for (int k = -1; k <= 3; ++k) {
    VirasoroOperator op = build_calL(k);
    for (const auto& m : test_monomials(2, 5)) {
      if (normalize(m).is_zero()) continue;
      DescElement image = apply_op(op, m);
      for (const auto& [x, c] : image.terms()) CHECK(degree(x) == degree(m) + k);
    }
  }
}

TEST_CASE("brackets") {
  CHECK(bracket_check(0, 1, 8));
  CHECK(bracket_check(-1, 2, 8));
  CHECK(bracket_check(2, 2, 4));
  for (int k = -1; k <= 3; ++k)
    for (int m = -1; m <= 3; ++m) CHECK(bracket_check(k, m, 4));

  for (int n = -1; n <= 3; ++n) {
    for (int k = 1; k <= 5; ++k) {
      VirasoroOperator lhs =
          commutator(build_L(n), VirasoroOperator::multiplication(DescElement(Monomial{{k, 3}}, Rational(factorial(k)))));
      VirasoroOperator rhs = VirasoroOperator::multiplication(
          DescElement(Monomial{{n + k, 3}}, Rational(k) * Rational(factorial(k + n))));
      CHECK(lhs == rhs);
    }
  }
  CHECK(commutator(VirasoroOperator::R(1), VirasoroOperator::R(2)) == VirasoroOperator::R(3));
  CHECK_THROWS_AS(compose(VirasoroOperator::R(0), VirasoroOperator::R(1)), std::logic_error);
}
