#include "pdc/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace pdc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int k) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), k)); }

std::string to_string(const Partition& mu) {
  std::string out = "(";
  for (std::size_t k = 0; k < mu.parts().size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(mu.parts()[k]);
  }
  return out + ")";
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Rational zaut(const Partition& mu) {
  Integer r = 1;
  for (int p : mu.parts()) r *= p;
  const auto& parts = mu.parts();
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t j = k;
    while (j < parts.size() && parts[j] == parts[k]) ++j;
    r *= factorial(static_cast<int>(j - k));
    k = j;
  }
  return Rational(r);
}

std::vector<SetPartition> set_partitions(int l) {
  if (l < 1) throw std::invalid_argument("set_partitions: l must be positive");
  // Restricted growth strings a[0]=0, a[k] <= 1 + max(a[0..k-1]), visited in
  // reverse lexicographic order of the string with the largest labels first.
  std::vector<SetPartition> out;
  std::vector<int> a(static_cast<std::size_t>(l), 0);
  std::function<void(int, int)> rec = [&](int k, int max_label) {
    if (k == l) {
      SetPartition p(static_cast<std::size_t>(max_label + 1));
      for (int idx = 0; idx < l; ++idx) p[static_cast<std::size_t>(a[static_cast<std::size_t>(idx)])].push_back(idx + 1);
      out.push_back(std::move(p));
      return;
    }
    for (int label = max_label + 1; label >= 0; --label) {
      a[static_cast<std::size_t>(k)] = label;
      rec(k + 1, std::max(max_label, label));
    }
  };
  rec(1, 0);
  return out;
}

int koszul_sign(const SetPartition& blocks, const std::vector<bool>& odd) {
  std::vector<int> order;
  for (const auto& b : blocks) order.insert(order.end(), b.begin(), b.end());
  int swaps = 0;
  for (std::size_t x = 0; x < order.size(); ++x) {
    for (std::size_t y = x + 1; y < order.size(); ++y) {
      int a = order[x];
      int b = order[y];
      if (a > b && odd.at(static_cast<std::size_t>(a - 1)) && odd.at(static_cast<std::size_t>(b - 1))) ++swaps;
    }
  }
  return swaps % 2 == 0 ? 1 : -1;
}

std::string to_string(const SetPartition& p) {
  std::string out = "{";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k > 0) out += ",";
    out += "{";
    for (std::size_t j = 0; j < p[k].size(); ++j) {
      if (j > 0) out += ",";
      out += std::to_string(p[k][j]);
    }
    out += "}";
  }
  return out + "}";
}

}  // namespace pdc
