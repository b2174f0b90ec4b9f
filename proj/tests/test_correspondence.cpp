#include <doctest.h>

#include "oracles.hpp"
#include "pdc/correspondence.hpp"
#include "pdc/series.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace pdc;

namespace {

QFunction qf(std::string_view text) { return parse_function(text).as_q(); }

Partition random_partition(std::mt19937& rng, int max_length, int max_part) {
  std::vector<int> parts;
  int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_length));
  for (int k = 0; k < n; ++k) parts.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(max_part)));
  return Partition(parts);
}

int block_parity(const Block& b, const std::vector<bool>& odd) {
  int p = 0;
  for (int x : b) p += odd[static_cast<std::size_t>(x - 1)] ? 1 : 0;
  return p % 2;
}

// Sign of permuting graded factors of the given parities into the order perm.
int permutation_sign(const std::vector<int>& parity, const std::vector<std::size_t>& perm) {
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b] && parity[perm[a]] && parity[perm[b]]) sign = -sign;
  return sign;
}

}  // namespace

TEST_CASE("K coefficients") {
  auto k = KCoefficient::make(Partition({2}), Partition({2}));
  CHECK(k.homogeneity == 0);
  CHECK_FALSE(k.forced_zero);
  CHECK(to_string(k) == "K(2)(2)");
  CHECK(KCoefficient::make(Partition({2}), Partition({1, 1})).forced_zero);
  CHECK(KCoefficient::make(Partition({2}), Partition({3})).forced_zero);
  CHECK(KCoefficient::make(Partition({1, 1}), Partition({2})).forced_zero);
  CHECK(KCoefficient::make(Partition({2, 1}), Partition({1})).homogeneity == 0);
  CHECK(to_string(KCoefficient::make(Partition({2}), Partition({3}))) == "0");
}

TEST_CASE("sub partitions") {
  Partition alpha({3, 2, 1, 1});
  CHECK(sub_partition(alpha, {1, 3}) == Partition({3, 1}));
  CHECK(sub_partition(alpha, {2}) == Partition({2}));
}

TEST_CASE("bar expansion examples") {
  auto ones = expand_bar(Partition({1, 1, 1}));
  REQUIRE(ones.size() == 1);
  CHECK(ones[0].blocks == SetPartition{{1}, {2}, {3}});
  for (const auto& h : ones[0].alpha_hat) CHECK(h == Partition({1}));
  CHECK(ones[0].iu_power == 0);

  auto two = expand_bar(Partition({2}));
  std::vector<Partition> targets;
  for (const auto& t : two) targets.push_back(t.alpha_hat.at(0));
  CHECK(targets == std::vector<Partition>{Partition({1}), Partition({2})});
  CHECK(std::count_if(targets.begin(), targets.end(), [](const Partition& p) { return p.size() == 2; }) == 1);
  CHECK(two[1].iu_power == -1);
  CHECK_FALSE(two[0].iu_power.has_value());

  auto twoone = expand_bar(Partition({2, 1}));
  std::set<SetPartition> shapes;
  for (const auto& t : twoone) shapes.insert(t.blocks);
  CHECK(shapes == std::set<SetPartition>{{{1}, {2}}, {{1, 2}}});
}

TEST_CASE("bar expansion properties") {
  std::mt19937 rng(41);
  for (int l = 1; l <= 6; ++l) CHECK(expand_bar(Partition(std::vector<int>(static_cast<std::size_t>(l), 1))).size() == 1);
  for (int t = 0; t < 25; ++t) {
    Partition alpha = random_partition(rng, 4, 4);
    std::vector<bool> odd;
    for (int k = 0; k < alpha.length(); ++k) odd.push_back(rng() % 2 == 1);
    auto terms = expand_bar(alpha, odd);
    int leading = 0;
    for (const auto& term : terms) {
      REQUIRE(term.alpha_hat.size() == term.blocks.size());
      CHECK(term.sign == koszul_sign(term.blocks, odd));
      if (term.iu_power) ++leading;
      for (std::size_t b = 0; b < term.blocks.size(); ++b) {
        Partition as = sub_partition(alpha, term.blocks[b]);
        const Partition& hat = term.alpha_hat[b];
        CHECK_FALSE(KCoefficient::make(as, hat).forced_zero);
        CHECK(hat.size() <= as.size());
        if (hat.size() == as.size()) {
          CHECK(as.length() == 1);
          CHECK(hat == as);
        }
      }
    }
    CHECK(leading == 1);
  }
}

TEST_CASE("signed terms do not depend on the block order") {
  std::mt19937 rng(43);
  for (int l = 1; l <= 5; ++l) {
    for (const auto& p : set_partitions(l)) {
      std::vector<bool> odd;
      for (int k = 0; k < l; ++k) odd.push_back(rng() % 2 == 1);
      std::vector<int> parity;
      for (const auto& b : p) parity.push_back(block_parity(b, odd));
      std::vector<std::size_t> perm(p.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        SetPartition q;
        for (auto i : perm) q.push_back(p[i]);
        CHECK(koszul_sign(q, odd) * permutation_sign(parity, perm) == koszul_sign(p, odd));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("leading terms") {
  CHECK(leading_term(Partition({1, 1, 1, 1})).iu_power == 0);
  CHECK(leading_term(Partition({2})).iu_power == -1);
  CHECK(leading_term(Partition({3, 2})).iu_power == -3);
  std::mt19937 rng(47);
  for (int t = 0; t < 20; ++t) {
    Partition alpha = random_partition(rng, 6, 6);
    CorrespondenceTerm lead = leading_term(alpha);
    CHECK(lead.iu_power == alpha.length() - alpha.size());
    CHECK(lead.blocks.size() == static_cast<std::size_t>(alpha.length()));
    for (std::size_t b = 0; b < lead.blocks.size(); ++b) CHECK(lead.alpha_hat[b] == sub_partition(alpha, lead.blocks[b]));
    if (alpha.length() <= 3) {
      auto terms = expand_bar(alpha);
      CHECK(std::find(terms.begin(), terms.end(), lead) != terms.end());
    }
  }
}

TEST_CASE("variable change") {
  auto cosine = gw_variable_change(qf("q+2q^2+q^3"), 4, 10);
  auto oracle_cos = oracle::two_minus_two_cos(11);
  for (int n = 0; n <= 10; ++n) CHECK(cosine.coeff(n) == GaussianRational(oracle_cos[static_cast<std::size_t>(n)]));

  auto sine = gw_variable_change(local_curve_series(1), 0, 8);
  auto oracle_sin = oracle::u2_over_four_sin_sq(11);
  for (int n = -2; n <= 8; ++n) CHECK(sine.coeff(n) == GaussianRational(oracle_sin[static_cast<std::size_t>(n + 2)]));
  CHECK(sine.coeff(2) == GaussianRational(Rational(1, 240)));

  auto one = gw_variable_change(qf("1"), 0, 4);
  CHECK(one == LaurentSeries<GaussianRational>::one(SeriesVariable::u, 5));
  CHECK_THROWS_AS(gw_variable_change(cap_series(1), 2, 4), std::invalid_argument);
}

TEST_CASE("parity and reality") {
  CHECK(parity_reality_check(gw_variable_change(qf("q+2q^2+q^3"), 4, 10), 1));
  LaurentSeries<GaussianRational> u3(SeriesVariable::u, 3, {GaussianRational(1)}, 8);
  CHECK_FALSE(parity_reality_check(u3, 1));
  CHECK(parity_reality_check(gw_variable_change(qf("(-2q-q^2+31q^3-31q^4+q^5+2q^6)/(18(1+q)^3)"), 4, 8), -1));
  CHECK(u_parity_sign(1, 4) == 1);
  CHECK(u_parity_sign(-1, 4) == -1);
  CHECK(u_parity_sign(1, 1) == -1);

  std::vector<std::pair<QFunction, int>> cases;
  for (const auto& rec : db_builtin().records())
    if (rec.value.is_q()) cases.emplace_back(rec.value.as_q(), expected_fe(rec.key).d_beta);
  for (int deg = 1; deg <= 4; ++deg) cases.emplace_back(local_curve_series(deg), 0);
  CobordismSeries shen = shen_example();
  for (const auto& [label, f] : shen.components()) cases.emplace_back(f, 4);
  cases.emplace_back(qf("1+q"), 1);
  cases.emplace_back(qf("q(1-q)"), 3);
  cases.emplace_back(qf("(1+q^3)/(1-q)^2"), 1);
  for (const auto& [f, d_beta] : cases) {
    for (int sign : {1, -1}) {
      bool fe = fe_check(f, d_beta, sign);
      bool parity = parity_reality_check(gw_variable_change(f, d_beta, 9), u_parity_sign(sign, d_beta));
      CHECK(fe == parity);
    }
  }
}

TEST_CASE("overline rendering") {
  std::string text = format_expansion(Partition({2}), expand_bar(Partition({2})));
  CHECK(text.find("overline{tau_1(g1)}") == 0);
  CHECK(text.find("(iu)^-1 tau_(2)(K_{(2),(2)} g1)") != std::string::npos);
}
