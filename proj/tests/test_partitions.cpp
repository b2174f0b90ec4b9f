#include <doctest.h>

#include "oracles.hpp"
#include "pdc/partitions.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace pdc;

namespace {

// Sign of sorting the concatenated blocks by adjacent swaps, counting swaps of two odd entries.
int bubble_sign(const SetPartition& p, const std::vector<bool>& odd) {
  std::vector<int> seq;
  for (const auto& b : p) seq.insert(seq.end(), b.begin(), b.end());
  int sign = 1;
  for (std::size_t pass = 0; pass < seq.size(); ++pass)
    for (std::size_t k = 0; k + 1 < seq.size(); ++k)
      if (seq[k] > seq[k + 1]) {
        if (odd[static_cast<std::size_t>(seq[k] - 1)] && odd[static_cast<std::size_t>(seq[k + 1] - 1)]) sign = -sign;
        std::swap(seq[k], seq[k + 1]);
      }
  return sign;
}

}  // namespace

TEST_CASE("partition type") {
  Partition mu({1, 3, 1});
  CHECK(mu.parts() == std::vector<int>{3, 1, 1});
  CHECK(mu.size() == 5);
  CHECK(mu.length() == 3);
  CHECK(mu.multiplicity(1) == 2);
  CHECK(mu.multiplicity(2) == 0);
  CHECK(to_string(mu) == "(3,1,1)");
  CHECK(to_string(Partition()) == "()");
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("partitions_of examples") {
  auto p0 = partitions_of(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].length() == 0);
  auto p2 = partitions_of(2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0] == Partition({2}));
  CHECK(p2[1] == Partition({1, 1}));
  CHECK(partitions_of(5).size() == 7);
}

TEST_CASE("partition counts follow the pentagonal recurrence") {
  auto counts = oracle::partition_counts(30);
  for (int n = 0; n <= 30; ++n) {
    auto ps = partitions_of(n);
    CHECK(ps.size() == counts[static_cast<std::size_t>(n)].get_ui());
    std::set<Partition> distinct(ps.begin(), ps.end());
    CHECK(distinct.size() == ps.size());
    CHECK(std::is_sorted(ps.rbegin(), ps.rend()));
    for (const auto& mu : ps) CHECK(mu.size() == n);
  }
}

TEST_CASE("zaut") {
  CHECK(zaut(Partition({1, 1})) == 2);
  CHECK(zaut(Partition({2})) == 2);
  CHECK(zaut(Partition({3, 1, 1})) == 6);
  CHECK(zaut(Partition()) == 1);
  for (int n = 0; n <= 10; ++n) {
    Rational total = 0;
    for (const auto& mu : partitions_of(n)) {
      CHECK(zaut(mu) == oracle::z_of(mu.parts()));
      total += 1 / zaut(mu);
    }
    CHECK(total == 1);
  }
}

TEST_CASE("set partitions") {
  auto s1 = set_partitions(1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0] == SetPartition{{1}});
  auto s2 = set_partitions(2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0] == SetPartition{{1}, {2}});
  CHECK(s2[1] == SetPartition{{1, 2}});
  CHECK(set_partitions(4).size() == 15);
  CHECK(to_string(s2[0]) == "{{1},{2}}");

  auto bell = oracle::bell_numbers(8);
  for (int l = 1; l <= 8; ++l) {
    auto all = set_partitions(l);
    CHECK(all.size() == bell[static_cast<std::size_t>(l)].get_ui());
    CHECK(all.front().size() == static_cast<std::size_t>(l));
    CHECK(all.back().size() == 1);
    std::set<SetPartition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& p : all) {
      std::vector<int> seen;
      for (std::size_t b = 0; b < p.size(); ++b) {
        CHECK(std::is_sorted(p[b].begin(), p[b].end()));
        if (b > 0) CHECK(p[b - 1].front() < p[b].front());
        seen.insert(seen.end(), p[b].begin(), p[b].end());
      }
      std::sort(seen.begin(), seen.end());
      for (int k = 0; k < l; ++k) CHECK(seen[static_cast<std::size_t>(k)] == k + 1);
    }
  }
}

TEST_CASE("koszul sign examples") {
  CHECK(koszul_sign({{2}, {1}}, {true, true}) == -1);
  CHECK(koszul_sign({{1, 3}, {2}}, {true, true, true}) == -1);
  CHECK(koszul_sign({{2}, {1}}, {true, false}) == 1);
  for (const auto& p : set_partitions(5)) CHECK(koszul_sign(p, std::vector<bool>(5, false)) == 1);
}

TEST_CASE("koszul sign against adjacent transpositions") {
  std::mt19937 rng(17);
  for (int l = 1; l <= 6; ++l) {
    for (const auto& p : set_partitions(l)) {
      std::vector<bool> odd;
      for (int k = 0; k < l; ++k) odd.push_back(rng() % 2 == 1);
      CHECK(koszul_sign(p, odd) == bubble_sign(p, odd));
      SetPartition rev(p.rbegin(), p.rend());
      CHECK(koszul_sign(rev, odd) == bubble_sign(rev, odd));
    }
  }
}

TEST_CASE("koszul sign is multiplicative over independent index ranges") {
  std::mt19937 rng(19);
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 3; ++b) {
      std::vector<bool> odd;
      for (int k = 0; k < a + b; ++k) odd.push_back(rng() % 2 == 1);
      std::vector<bool> odd_a(odd.begin(), odd.begin() + a), odd_b(odd.begin() + a, odd.end());
      for (const auto& p : set_partitions(a)) {
        for (const auto& q : set_partitions(b)) {
          SetPartition joined = p;
          for (auto blk : q) {
            for (auto& x : blk) x += a;
            joined.push_back(blk);
          }
          CHECK(koszul_sign(joined, odd) == koszul_sign(p, odd_a) * koszul_sign(q, odd_b));
        }
      }
    }
  }
}
