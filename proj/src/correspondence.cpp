#include "pdc/correspondence.hpp"

#include <stdexcept>

namespace pdc {

KCoefficient KCoefficient::make(const Partition& alpha, const Partition& alpha_hat) {
  KCoefficient k{alpha, alpha_hat, 0, false};
  k.homogeneity = alpha.size() + alpha.length() - alpha_hat.size() - alpha_hat.length() - 3 * (alpha.length() - 1);
  k.forced_zero = alpha_hat.size() > alpha.size() || k.homogeneity < 0 || alpha_hat.size() == 0;
  return k;
}

std::string to_string(const KCoefficient& k) {
  if (k.forced_zero) return "0";
  return "K" + to_string(k.alpha) + to_string(k.alpha_hat);
}

Partition sub_partition(const Partition& alpha, const Block& block) {
  std::vector<int> parts;
  for (int idx : block) parts.push_back(alpha.parts().at(static_cast<std::size_t>(idx - 1)));
  return Partition(std::move(parts));
}

namespace {

std::vector<Partition> targets(const Partition& alpha_s) {
  std::vector<Partition> out;
  for (int n = 1; n <= alpha_s.size(); ++n)
    for (const Partition& hat : partitions_of(n))
      if (!KCoefficient::make(alpha_s, hat).forced_zero) out.push_back(hat);
  return out;
}

int leading_power(const Partition& alpha) { return alpha.length() - alpha.size(); }

bool is_leading(const Partition& alpha, const SetPartition& p, const std::vector<Partition>& hats) {
  if (static_cast<int>(p.size()) != alpha.length()) return false;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (!(hats[k] == sub_partition(alpha, p[k]))) return false;
  return true;
}

}  // namespace

std::vector<CorrespondenceTerm> expand_bar(const Partition& alpha, const std::vector<bool>& odd) {
  if (static_cast<int>(odd.size()) != alpha.length())
    throw std::invalid_argument("expand_bar: one parity per part of alpha");
  std::vector<CorrespondenceTerm> out;
  if (alpha.length() == 0) return out;
  for (const SetPartition& p : set_partitions(alpha.length())) {
    std::vector<std::vector<Partition>> choices;
    bool empty = false;
    for (const Block& b : p) {
      choices.push_back(targets(sub_partition(alpha, b)));
      empty = empty || choices.back().empty();
    }
    if (empty) continue;
    const int sign = koszul_sign(p, odd);
    std::vector<std::size_t> pick(p.size(), 0);
    for (;;) {
      CorrespondenceTerm t{p, {}, sign, std::nullopt};
      for (std::size_t k = 0; k < p.size(); ++k) t.alpha_hat.push_back(choices[k][pick[k]]);
      if (is_leading(alpha, p, t.alpha_hat)) t.iu_power = leading_power(alpha);
      out.push_back(std::move(t));
      std::size_t k = p.size();
      while (k > 0 && ++pick[k - 1] == choices[k - 1].size()) {
        pick[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  return out;
}

std::vector<CorrespondenceTerm> expand_bar(const Partition& alpha) {
  return expand_bar(alpha, std::vector<bool>(static_cast<std::size_t>(alpha.length()), false));
}

CorrespondenceTerm leading_term(const Partition& alpha) {
  CorrespondenceTerm t;
  for (int k = 1; k <= alpha.length(); ++k) {
    t.blocks.push_back({k});
    t.alpha_hat.push_back(Partition({alpha.parts()[static_cast<std::size_t>(k - 1)]}));
  }
  t.iu_power = leading_power(alpha);
  return t;
}

LaurentSeries<GaussianRational> gw_variable_change(const FieldFunction& f, int d_beta, int order) {
  switch (f.field()) {
    case Field::Q: return u_expand(f.as_q(), d_beta, order);
    case Field::Qi: return u_expand(f.as_qi(), d_beta, order);
    default: throw std::invalid_argument("the variable change needs a series over Q or Qi");
  }
}

bool parity_reality_check(const LaurentSeries<GaussianRational>& s, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  for (int n = s.valuation(); n < s.order(); ++n) {
    const GaussianRational c = s.coeff(n);
    if (is_zero(c)) continue;
    const int parity = (n % 2 == 0) ? 1 : -1;
    if (parity != sign) return false;
    if (sign == 1 && !is_zero(c.im())) return false;
    if (sign == -1 && !is_zero(c.re())) return false;
  }
  return true;
}

int u_parity_sign(int fe_sign, int d_beta) { return d_beta % 2 == 0 ? fe_sign : -fe_sign; }

std::string format_expansion(const Partition& alpha, const std::vector<CorrespondenceTerm>& terms) {
  auto tau = [](int sub, const std::string& arg) { return "tau_" + std::to_string(sub) + "(" + arg + ")"; };
  std::string head;
  for (int k = 0; k < alpha.length(); ++k) {
    if (k > 0) head += " ";
    head += tau(alpha.parts()[static_cast<std::size_t>(k)] - 1, "g" + std::to_string(k + 1));
  }
  std::string out = "overline{" + head + "} =\n";
  if (terms.empty()) return out + "  0\n";
  for (const auto& t : terms) {
    out += t.sign < 0 ? "  - " : "  + ";
    if (t.iu_power) out += "(iu)^" + std::to_string(*t.iu_power) + " ";
    for (std::size_t k = 0; k < t.blocks.size(); ++k) {
      if (k > 0) out += " ";
      std::string gamma;
      for (int idx : t.blocks[k]) gamma += "g" + std::to_string(idx);
      const Partition alpha_s = sub_partition(alpha, t.blocks[k]);
      out += "tau_" + to_string(t.alpha_hat[k]) + "(K_{" + to_string(alpha_s) + "," + to_string(t.alpha_hat[k]) +
             "} " + gamma + ")";
    }
    out += "\n";
  }
  return out;
}

}  // namespace pdc
