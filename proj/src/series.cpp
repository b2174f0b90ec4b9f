#include "pdc/series.hpp"

#include "pdc/errors.hpp"
#include "pdc/virasoro.hpp"

#include <stdexcept>

namespace pdc {

namespace {

struct GeometryName {
  Geometry g;
  std::string_view name;
};
constexpr GeometryName kGeometryNames[] = {
    {Geometry::P3, "P3"},
    {Geometry::P3Equivariant, "P3_equivariant"},
    {Geometry::Cap, "Cap"},
    {Geometry::LocalCurve, "LocalCurve"},
    {Geometry::CobordismP3, "CobordismP3"},
};

int subscript_sum(const Monomial& m) {
  int k = 0;
  for (const auto& g : m.factors()) k += g.i - 2;
  return k;
}

Partition parse_boundary(const std::string& label) {
  // "(3,1)" or "(1)"
  if (label.size() < 2 || label.front() != '(' || label.back() != ')')
    throw std::invalid_argument("boundary label must look like (a,b,...)");
  std::vector<int> parts;
  std::string body = label.substr(1, label.size() - 2);
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    parts.push_back(std::stoi(body.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

bool is_normalized(const Monomial& m) {
  for (const auto& g : m.factors())
    if (g.i <= 1) return false;
  return true;
}

}  // namespace

std::string_view geometry_name(Geometry g) {
  for (const auto& e : kGeometryNames)
    if (e.g == g) return e.name;
  return "?";
}

Geometry parse_geometry(std::string_view name) {
  for (const auto& e : kGeometryNames)
    if (e.name == name) return e.g;
  throw std::invalid_argument("unknown geometry '" + std::string(name) + "'");
}

std::string to_string(const SeriesKey& key) {
  std::string out = std::string(geometry_name(key.geometry)) + ":" + std::to_string(key.degree) + ":" +
                    to_string(key.insertions);
  if (key.boundary) out += "|" + *key.boundary;
  return out;
}

SeriesKey parse_key(std::string_view text) {
  const std::string s(text);
  std::size_t c1 = s.find(':');
  std::size_t c2 = c1 == std::string::npos ? c1 : s.find(':', c1 + 1);
  if (c2 == std::string::npos) throw ParseError(s, s.size(), "expected GEOMETRY:DEGREE:INSERTIONS");
  SeriesKey key;
  try {
    key.geometry = parse_geometry(s.substr(0, c1));
  } catch (const std::invalid_argument& e) {
    throw ParseError(s, 0, e.what());
  }
  const std::string deg = s.substr(c1 + 1, c2 - c1 - 1);
  if (deg.empty() || deg.find_first_not_of("0123456789") != std::string::npos || deg.size() > 6)
    throw ParseError(s, c1 + 1, "expected a positive degree");
  key.degree = std::stoi(deg);
  if (key.degree < 1) throw ParseError(s, c1 + 1, "expected a positive degree");
  std::string rest = s.substr(c2 + 1);
  std::size_t bar = rest.find('|');
  if (bar != std::string::npos) {
    key.boundary = rest.substr(bar + 1);
    rest = rest.substr(0, bar);
  }
  try {
    key.insertions = parse_insertions(rest);
  } catch (const ParseError& e) {
    throw ParseError(s, c2 + 1 + e.position(), e.what());
  }
  return key;
}

Monomial parse_insertions(std::string_view text) {
  if (text == "1") return {};
  DescElement e = normalize(parse_desc(text));
  if (e.terms().size() != 1 || e.terms().begin()->second != 1)
    throw ParseError(std::string(text), 0, "insertions must normalize to a single monomial");
  return e.terms().begin()->first;
}

FunctionalEquation expected_fe(const SeriesKey& key) {
  int k = subscript_sum(key.insertions);
  switch (key.geometry) {
    case Geometry::P3:
    case Geometry::P3Equivariant:
      return {k % 2 == 0 ? 1 : -1, 4 * key.degree};
    case Geometry::Cap: {
      int mu = 0;
      if (key.boundary) {
        Partition p = parse_boundary(*key.boundary);
        mu = p.size() - p.length();
      }
      return {(mu + k) % 2 == 0 ? 1 : -1, 2 * key.degree};
    }
    case Geometry::LocalCurve:
      return {k % 2 == 0 ? 1 : -1, 0};
    case Geometry::CobordismP3:
      return {1, 4 * key.degree};
  }
  return {};
}

int divisibility(const SeriesKey& key) { return key.degree; }

std::string_view provenance_name(Provenance p) {
  switch (p) {
    case Provenance::paper_exact: return "paper-exact";
    case Provenance::paper_conjectural: return "paper-conjectural";
    case Provenance::evaluator: return "evaluator";
  }
  return "?";
}

Provenance parse_provenance(std::string_view name) {
  for (Provenance p : {Provenance::paper_exact, Provenance::paper_conjectural, Provenance::evaluator})
    if (provenance_name(p) == name) return p;
  throw std::invalid_argument("unknown provenance '" + std::string(name) + "'");
}

void SeriesDB::insert(SeriesRecord record) {
  if (!is_normalized(record.key.insertions))
    throw std::invalid_argument("series keys need normalized insertions: " + to_string(record.key));
  if (record.key.degree < 1) throw std::invalid_argument("series degree must be positive");
  SeriesKey key = record.key;
  records_.insert_or_assign(std::move(key), std::move(record));
}

const SeriesRecord* SeriesDB::find(const SeriesKey& key) const {
  auto it = records_.find(key);
  return it == records_.end() ? nullptr : &it->second;
}

const SeriesRecord& SeriesDB::at(const SeriesKey& key) const {
  if (const SeriesRecord* r = find(key)) return *r;
  throw UnknownSeries(to_string(key));
}

std::vector<SeriesRecord> SeriesDB::records() const {
  std::vector<SeriesRecord> out;
  out.reserve(records_.size());
  for (const auto& [key, r] : records_) out.push_back(r);
  return out;
}

SeriesDB db_builtin() {
  SeriesDB db;
  auto p3 = [&](int d, const char* insertions, const char* value, Provenance prov = Provenance::paper_exact) {
    db.insert({parse_key(std::string("P3:") + std::to_string(d) + ":" + insertions), parse_function(value), prov});
  };
  p3(1, "tau0(p)*tau0(p)", "q + 2q^2 + q^3");
  p3(1, "tau2(p)", "1/12 q - 5/6 q^2 + 1/12 q^3");
  p3(1, "tau5(1)", "(-2q - q^2 + 31q^3 - 31q^4 + q^5 + 2q^6)/(18(1+q)^3)");
  p3(1, "tau1(1)*tau5(1)", "(q + 4q^2 + 17q^3 - 62q^4 + 17q^5 + 4q^6 + q^7)/(9(1+q)^4)");
  p3(1, "tau1(H)*tau1(p)", "3/4 q - 3/2 q^2 + 3/4 q^3");
  p3(2, "tau9(1)",
     "-(73q^12 - 825q^11 - 124q^10 + 5945q^9 + 779q^8 - 36020q^7 + 60224q^6 - 36020q^5 + 779q^4"
     " + 5945q^3 - 124q^2 - 825q + 73) q / (60480 (1+q)^3 (-1+q)^3)",
     Provenance::paper_conjectural);

  const std::string a = "(1/8 lambda0 - 1/24 (lambda1+lambda2+lambda3))";
  const std::string b = "(9/8 lambda0 - 3/8 (lambda1+lambda2+lambda3))";
  db.insert({parse_key("P3_equivariant:1:tau3(p)"),
             parse_function("(" + a + "q - " + b + "q^2 + " + b + "q^3 - " + a + "q^4)/(1+q)", Field::Qlambda),
             Provenance::paper_exact});

  db.insert({parse_key("Cap:1:tau2(p)|(1)"),
             parse_function("(2s1^2 + 3s1 s2 + 2s2^2) q (1+q^2)/(1+q)^2"
                            " + (6s3(s1+s2) - 2s1^2 - 6s1 s2 - 2s2^2) q^2/(1+q)^2",
                            Field::Qs),
             Provenance::paper_exact});
  return db;
}

QFunction local_curve_series(int d) {
  if (d < 1) throw std::invalid_argument("local_curve_series needs d >= 1");
  QFunction total;
  for (const Partition& mu : partitions_of(d)) {
    QFunction term = QFunction::constant(Rational(mu.length() % 2 == 0 ? 1 : -1) / zaut(mu));
    for (int m : mu.parts()) {
      Polynomial<Rational> factor = one_minus_neg_q_pow<Rational>(m);
      QFunction numer(Polynomial<Rational>::monomial(Rational(m % 2 == 0 ? 1 : -1), m));
      term *= numer / QFunction(factor * factor);
    }
    total += term;
  }
  return total;
}

FieldFunction cap_series(int d) {
  if (d < 1) throw std::invalid_argument("cap_series needs d >= 1");
  QFunction sum;
  for (int i = 1; i <= d; ++i) {
    Polynomial<Rational> minus = one_minus_neg_q_pow<Rational>(i);
    Polynomial<Rational> plus = Polynomial<Rational>::constant(2) - minus;  // 1 + (-q)^i
    sum += QFunction(plus, minus);
  }
  sum = sum.times_q_power(d).scaled(Rational(1) / Rational(factorial(d)));
  const ParamFraction half_s = (ParamFraction::variable(0) + ParamFraction::variable(1)) / ParamFraction(2);
  ParamFunction lifted = sum.map_coefficients([](const Rational& c) { return ParamFraction(c); });
  return FieldFunction(Field::Qs, lifted.scaled(half_s));
}

SeriesKey cap_key(int d) {
  return {Geometry::Cap, d, Monomial{from_tau(d, 3)}, "(" + std::to_string(d) + ")"};
}

SeriesKey local_curve_key(int d) { return {Geometry::LocalCurve, d, Monomial{}, std::nullopt}; }

namespace {

QFunction reduce_monomial(const Monomial& m, int d, const SeriesDB& db) {
  const Generator string_gen(2, 0);
  const Generator divisor_gen(2, 1);
  const Generator dilaton_gen(3, 0);
  if (degree(m) != 4 * d) return {};
  if (m.count(string_gen) > 0) return {};
  int divisors = 0;
  int dilatons = 0;
  std::vector<Generator> rest;
  for (const auto& g : m.factors()) {
    if (g == divisor_gen) {
      ++divisors;
    } else if (g == dilaton_gen) {
      ++dilatons;
    } else {
      rest.push_back(g);
    }
  }
  const SeriesRecord& record = db.at({Geometry::P3, d, Monomial(std::move(rest)), std::nullopt});
  QFunction f = record.value.as_q();
  for (int k = 0; k < dilatons; ++k) f = f.q_ddq() - f.scaled(Rational(2 * d));
  Integer scale = 1;
  for (int k = 0; k < divisors; ++k) scale *= d;
  return f.scaled(Rational(scale));
}

}  // namespace

QFunction reduce(const DescElement& e, int d, const SeriesDB& db) {
  if (d < 1) throw std::invalid_argument("reduce needs a positive degree");
  QFunction total;
  const DescElement n = normalize(e);
  for (const auto& [m, c] : n.terms()) total += reduce_monomial(m, d, db).scaled(c);
  return total;
}

bool virasoro_constraint_check(int k, const Monomial& d_monomial, int d, const SeriesDB& db) {
  SeriesDB exact;
  for (auto& r : db.records())
    if (r.provenance != Provenance::paper_conjectural) exact.insert(r);
  return reduce(apply_op(build_calL(k), DescElement(d_monomial)), d, exact).is_zero();
}

void CobordismSeries::set(const Partition& label, QFunction f) {
  if (label.size() != dimension_)
    throw std::invalid_argument("cobordism label " + to_string(label) + " is not a partition of " +
                                std::to_string(dimension_));
  c_.insert_or_assign(label, std::move(f));
}

const QFunction& CobordismSeries::at(const Partition& label) const {
  auto it = c_.find(label);
  if (it == c_.end()) throw std::out_of_range("no cobordism component " + to_string(label));
  return it->second;
}

CobordismSeries shen_example() {
  CobordismSeries s(4);
  s.set(Partition({4}), parse_function("-4q - 40q^2 - 4q^3").as_q());
  s.set(Partition({3, 1}),
        parse_function("q/(1+q)^4 (21/2 + 139q + 823/2 q^2 + 446q^3 + 823/2 q^4 + 139q^5 + 21/2 q^6)").as_q());
  s.set(Partition({2, 2}), parse_function("6q + 60q^2 + 6q^3").as_q());
  s.set(Partition({2, 1, 1}),
        parse_function("q/(1+q)^4 (-18 - 264q - 774q^2 - 816q^3 - 774q^4 - 264q^5 - 18q^6)").as_q());
  s.set(Partition({1, 1, 1, 1}),
        parse_function("q/(1+q)^6 (13/2 + 115q + 490q^2 + 889q^3 + 1215q^4 + 889q^5 + 490q^6 + 115q^7 + 13/2 q^8)")
            .as_q());
  return s;
}

bool cobordism_fe_check(const CobordismSeries& s, int d_beta) {
  for (const auto& [label, f] : s.components())
    if (!fe_check(f, d_beta, 1)) return false;
  return true;
}

ChernNumberKey::ChernNumberKey(Partition sigma, int d_beta) : sigma_(std::move(sigma)) {
  if (sigma_.size() != d_beta) throw std::invalid_argument("Chern number index must be a partition of d_beta");
}

}  // namespace pdc
