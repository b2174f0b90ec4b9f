#include <doctest.h>

#include "pdc/descendents.hpp"
#include "pdc/errors.hpp"

#include <random>

using namespace pdc;

namespace {

Monomial random_monomial(std::mt19937& rng, int max_factors, int max_i) {
  std::vector<Generator> g;
  int n = static_cast<int>(rng() % static_cast<unsigned>(max_factors + 1));
  for (int k = 0; k < n; ++k)
    g.emplace_back(static_cast<int>(rng() % static_cast<unsigned>(max_i + 1)), static_cast<int>(rng() % 4));
  return Monomial(g);
}

DescElement random_element(std::mt19937& rng) {
  DescElement e;
  for (int t = 0; t < 3; ++t)
    e.add(random_monomial(rng, 3, 5), Rational(static_cast<int>(rng() % 7) - 3));
  return e;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(from_tau(0, 3) == Generator(2, 3));
  CHECK(from_tau(2, 3) == Generator(4, 3));
  CHECK(from_tau(5, 0) == Generator(7, 0));
  CHECK_THROWS_AS(Generator(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(Generator(-1, 0), std::invalid_argument);
  CHECK(to_string(Generator(3, 1)) == "ch3(H)");
  CHECK(class_name(2) == "L");
}

TEST_CASE("normalize") {
  CHECK(normalize(Monomial{{0, 3}, {2, 1}}) == -DescElement(Monomial{{2, 1}}));
  CHECK(normalize(Monomial{{1, 2}, {1, 2}}).is_zero());
  CHECK(normalize(Monomial{{3, 3}}) == DescElement(Monomial{{3, 3}}));
  CHECK(normalize(Monomial{{0, 3}, {0, 3}}) == DescElement::constant(1));
  CHECK(normalize(Monomial{{0, 1}}).is_zero());
}

TEST_CASE("degree") {
  CHECK(degree(Monomial{{3, 1}, {3, 3}}) == 4);
  CHECK(degree(Monomial{{2, 3}}) == 2);
  CHECK(degree(Monomial{}) == 0);
  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    Monomial a = random_monomial(rng, 3, 8), b = random_monomial(rng, 3, 8);
    CHECK(degree(a * b) == degree(a) + degree(b));
  }
}

TEST_CASE("normalize properties") {
  std::mt19937 rng(29);
  for (int t = 0; t < 60; ++t) {
    DescElement x = random_element(rng), y = random_element(rng);
    DescElement nx = normalize(x), ny = normalize(y);
    CHECK(normalize(nx) == nx);
    CHECK(normalize(x + y) == nx + ny);
    CHECK(normalize(x * ny) == nx * ny);
  }
}

TEST_CASE("kunneth expansion") {
  DescElement j1 = DescElement(Monomial{{2, 3}, {5, 1}}) + DescElement(Monomial{{2, 2}, {5, 2}}) +
                   DescElement(Monomial{{2, 1}, {5, 3}});
  CHECK(kunneth_expand(2, 5, 1) == j1);
  CHECK(kunneth_expand(2, 5, 3) == DescElement(Monomial{{2, 3}, {5, 3}}));
  DescElement j0;
  for (int r = 0; r <= 3; ++r) j0 += DescElement(Monomial{{4, r}, {6, 3 - r}});
  CHECK(kunneth_expand(4, 6, 0) == j0);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int j = 0; j <= 3; ++j) CHECK(kunneth_expand(a, b, j) == kunneth_expand(b, a, j));
}

TEST_CASE("printing and parsing") {
  CHECK(to_string(DescElement(Monomial{{3, 3}, {3, 1}})) == "ch3(H)*ch3(p)");
  CHECK(to_string(DescElement(Monomial{{2, 3}, {2, 3}})) == "ch2(p)*ch2(p)");
  CHECK(to_string(DescElement::constant(1)) == "1");
  CHECK(parse_desc("tau0(p)^2") == DescElement(Monomial{{2, 3}, {2, 3}}));
  CHECK(parse_desc("ch_3(H^1)") == DescElement(Monomial{{3, 1}}));
  CHECK(parse_desc("tau_{5}(1)") == DescElement(Monomial{{7, 0}}));
  CHECK(parse_desc("-1/2*ch2(p) + ch2(p)") == DescElement(Monomial{{2, 3}}, Rational(1, 2)));
  CHECK(parse_desc("2*(ch2(L) - ch2(L))").is_zero());
  CHECK(parse_monomial("ch4(p)") == Monomial{{4, 3}});
  CHECK_THROWS_AS(parse_monomial("2*ch4(p)"), ParseError);
  CHECK_THROWS_AS(parse_desc("ch3(q)"), ParseError);
  CHECK_THROWS_AS(parse_desc("ch3(p"), ParseError);

  std::mt19937 rng(31);
  for (int t = 0; t < 60; ++t) {
    DescElement e = random_element(rng);
    CHECK(parse_desc(to_string(e)) == e);
  }
}
