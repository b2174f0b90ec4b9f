#pragma once

#include "pdc/field_function.hpp"
#include "pdc/partitions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pdc {

// Matrix element K~_{alpha, alpha_hat}. Only its vanishing and homogeneity are
// known; a nonzero element stays an opaque symbol.
struct KCoefficient {
  Partition alpha;
  Partition alpha_hat;
  /// |alpha| + l(alpha) - |alpha_hat| - l(alpha_hat) - 3(l(alpha) - 1)
  int homogeneity = 0;
  /// |alpha_hat| > |alpha|, or negative homogeneity (the c_i have positive degree).
  bool forced_zero = false;

  static KCoefficient make(const Partition& alpha, const Partition& alpha_hat);
};

std::string to_string(const KCoefficient& k);

struct CorrespondenceTerm {
  SetPartition blocks;
  /// Target partition for each block, in block order.
  std::vector<Partition> alpha_hat;
  int sign = 1;
  /// Exponent of (iu) carried by the leading term; empty elsewhere.
  std::optional<int> iu_power;

  friend bool operator==(const CorrespondenceTerm&, const CorrespondenceTerm&) = default;
};

/// alpha_S: the parts of alpha at the (1-based) indices of the block.
Partition sub_partition(const Partition& alpha, const Block& block);

/// Terms of the set-partition expansion of the bar of tau_{a_1-1}(g_1)...tau_{a_l-1}(g_l),
/// one per set partition and choice of nonvanishing alpha_hat per block.
/// odd[k] is the parity of g_{k+1}. Set partitions run finest first; for each
/// block the targets run by size, then descending.
std::vector<CorrespondenceTerm> expand_bar(const Partition& alpha, const std::vector<bool>& odd);
std::vector<CorrespondenceTerm> expand_bar(const Partition& alpha);

/// The finest set partition with alpha_hat_S = alpha_S and prefactor (iu)^{l(alpha)-|alpha|}.
CorrespondenceTerm leading_term(const Partition& alpha);

/// exp(-i d_beta u/2) F(-exp(iu)) as a u-series through u^order. F over Q or Qi.
LaurentSeries<GaussianRational> gw_variable_change(const FieldFunction& f, int d_beta, int order);

/// S(-u) = sign S(u), with real coefficients for sign +1 and purely imaginary ones for sign -1.
bool parity_reality_check(const LaurentSeries<GaussianRational>& s, int sign);

/// The sign for parity_reality_check of the transform of a series with
/// functional equation sign fe_sign and exponent d_beta: fe_sign * (-1)^{d_beta}.
int u_parity_sign(int fe_sign, int d_beta);

/// Multi-line rendering in overline notation.
std::string format_expansion(const Partition& alpha, const std::vector<CorrespondenceTerm>& terms);

}  // namespace pdc
