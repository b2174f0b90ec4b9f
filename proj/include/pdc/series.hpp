#pragma once

#include "pdc/descendents.hpp"
#include "pdc/field_function.hpp"
#include "pdc/partitions.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pdc {

enum class Geometry { P3, P3Equivariant, Cap, LocalCurve, CobordismP3 };

std::string_view geometry_name(Geometry g);
Geometry parse_geometry(std::string_view name);

struct SeriesKey {
  Geometry geometry = Geometry::P3;
  int degree = 1;
  Monomial insertions;
  std::optional<std::string> boundary;

  friend bool operator==(const SeriesKey&, const SeriesKey&) = default;
  friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
};

/// "P3:1:ch3(H)*ch3(p)", with "|(1)" appended for a boundary condition.
std::string to_string(const SeriesKey& key);
/// Inverse of to_string; insertions may use tau or ch syntax. Throws ParseError.
SeriesKey parse_key(std::string_view text);
/// "1" or a product of generators whose normalization is a monomial with coefficient 1.
Monomial parse_insertions(std::string_view text);

/// (sign, d_beta) of the functional equation F(1/q) = sign q^{-d_beta} F(q) that
/// the series with this key is expected to satisfy.
struct FunctionalEquation {
  int sign = 1;
  int d_beta = 0;
};
FunctionalEquation expected_fe(const SeriesKey& key);

/// div(beta) for the pole constraint.
int divisibility(const SeriesKey& key);

enum class Provenance { paper_exact, paper_conjectural, evaluator };
std::string_view provenance_name(Provenance p);
Provenance parse_provenance(std::string_view name);

struct SeriesRecord {
  SeriesKey key;
  FieldFunction value;
  Provenance provenance = Provenance::paper_exact;

  friend bool operator==(const SeriesRecord&, const SeriesRecord&) = default;
};

// Partition functions indexed by key. Insertions must be normalized monomials.
class SeriesDB {
 public:
  /// Adds or replaces a record; throws std::invalid_argument for unnormalized insertions.
  void insert(SeriesRecord record);
  const SeriesRecord* find(const SeriesKey& key) const;
  /// Throws UnknownSeries.
  const SeriesRecord& at(const SeriesKey& key) const;
  std::size_t size() const { return records_.size(); }
  std::vector<SeriesRecord> records() const;

 private:
  std::map<SeriesKey, SeriesRecord> records_;
};

/// The eight reference series: five degree 1 P^3 series, one degree 2 series, the
/// equivariant tau_3(p) series and the cap series of tau_2(p) with boundary (1).
SeriesDB db_builtin();

/// Contribution of degree d covers of a rigid rational curve:
/// sum over mu |- d of (-1)^{l(mu)}/z(mu) prod_i (-q)^{m_i} / (1-(-q)^{m_i})^2.
QFunction local_curve_series(int d);

/// Cap series of tau_d(p) with boundary (d):
/// (q^d/d!) ((s1+s2)/2) sum_{i=1}^d (1+(-q)^i)/(1-(-q)^i), over Q_s.
FieldFunction cap_series(int d);

SeriesKey cap_key(int d);
SeriesKey local_curve_key(int d);

/// Z_P(P^3; q | E)_{dL} from the string, divisor and dilaton equations, the
/// dimension constraint and database lookups. Throws UnknownSeries.
QFunction reduce(const DescElement& e, int d, const SeriesDB& db);

/// True iff reduce(apply_op(calL_k, D), d) vanishes. Conjectural records are not used.
bool virasoro_constraint_check(int k, const Monomial& d_monomial, int d, const SeriesDB& db);

/// Components labelled by partitions of the virtual dimension, one per
/// product of projective spaces P^{a_1} x ... x P^{a_n}.
class CobordismSeries {
 public:
  CobordismSeries() = default;
  explicit CobordismSeries(int dimension) : dimension_(dimension) {}

  int dimension() const { return dimension_; }
  const std::map<Partition, QFunction>& components() const { return c_; }
  /// Throws std::invalid_argument unless label is a partition of dimension().
  void set(const Partition& label, QFunction f);
  const QFunction& at(const Partition& label) const;

 private:
  int dimension_ = 4;
  std::map<Partition, QFunction> c_;
};

/// The degree 1 series of P^3 in the basis [P^4], [P^3xP^1], [P^2xP^2], [P^2xP^1xP^1], [P^1]^4.
CobordismSeries shen_example();

/// Every component satisfies F(1/q) = q^{-d_beta} F(q).
bool cobordism_fe_check(const CobordismSeries& s, int d_beta);

// Index of a virtual Chern number c^sigma: a partition of d_beta.
class ChernNumberKey {
 public:
  ChernNumberKey(Partition sigma, int d_beta);
  const Partition& sigma() const { return sigma_; }

 private:
  Partition sigma_;
};

}  // namespace pdc
