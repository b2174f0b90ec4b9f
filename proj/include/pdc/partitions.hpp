#pragma once

#include "pdc/rational.hpp"

#include <string>
#include <vector>

namespace pdc {

// Integer partition with parts in weakly decreasing order.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts descending; throws std::invalid_argument on a non-positive part.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  /// Number of parts equal to k.
  int multiplicity(int k) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// "(3,1,1)"; "()" for the empty partition.
std::string to_string(const Partition& mu);

/// All partitions of n in lexicographically descending order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);

/// prod_i m_i * prod_k (multiplicity of k)!
Rational zaut(const Partition& mu);

// Blocks of 1-based indices, each block ascending, blocks ordered by least element.
using Block = std::vector<int>;
using SetPartition = std::vector<Block>;

/// All Bell(l) set partitions of {1..l}, from the finest to the coarsest.
std::vector<SetPartition> set_partitions(int l);

/// Koszul sign of regrouping 1..l into the blocks of P taken in their stored order,
/// keeping the order inside each block; only swaps of two odd indices count.
/// odd[k] is the parity of index k+1.
int koszul_sign(const SetPartition& blocks, const std::vector<bool>& odd);

std::string to_string(const SetPartition& p);

}  // namespace pdc
