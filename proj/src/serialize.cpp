#include "pdc/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pdc {

namespace {

std::string monomial_key(const MvPolynomial::Exponents& e, std::span<const std::string_view> names) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (k >= names.size()) throw std::invalid_argument("parameter index out of range for field");
    if (!out.empty()) out += "*";
    out += names[k];
    if (e[k] > 1) out += "^" + std::to_string(e[k]);
  }
  return out.empty() ? "1" : out;
}

MvPolynomial::Exponents parse_monomial_key(const std::string& key, std::span<const std::string_view> names) {
  MvPolynomial::Exponents e{};
  if (key == "1") return e;
  std::size_t pos = 0;
  while (pos <= key.size()) {
    std::size_t star = key.find('*', pos);
    if (star == std::string::npos) star = key.size();
    std::string factor = key.substr(pos, star - pos);
    int power = 1;
    if (std::size_t caret = factor.find('^'); caret != std::string::npos) {
      const std::string digits = factor.substr(caret + 1);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad exponent in parameter monomial '" + key + "'");
      power = std::stoi(digits);
      factor = factor.substr(0, caret);
    }
    bool found = false;
    for (std::size_t k = 0; k < names.size(); ++k) {
      if (names[k] == factor) {
        e[k] += power;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("unknown parameter '" + factor + "'");
    pos = star + 1;
  }
  return e;
}

Json mv_to_json(const MvPolynomial& p, std::span<const std::string_view> names) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[monomial_key(e, names)] = to_string(c);
  return j;
}

MvPolynomial mv_from_json(const Json& j, std::span<const std::string_view> names) {
  if (!j.is_object()) throw std::invalid_argument("parameter polynomial must be a JSON object");
  MvPolynomial p;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw std::invalid_argument("coefficients must be strings");
    p += MvPolynomial::monomial(parse_monomial_key(key, names), parse_rational(value.get<std::string>()));
  }
  return p;
}

Json coeff_to_json(const Rational& c, std::span<const std::string_view>) { return to_string(c); }
Json coeff_to_json(const GaussianRational& c, std::span<const std::string_view>) { return to_string(c); }
Json coeff_to_json(const ParamFraction& c, std::span<const std::string_view> names) {
  return Json{{"num", mv_to_json(c.num(), names)}, {"den", mv_to_json(c.den(), names)}};
}

template <class K>
Json poly_to_json(const Polynomial<K>& p, std::span<const std::string_view> names) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(coeff_to_json(c, names));
  return a;
}

template <class K, class Parse>
Polynomial<K> poly_from_json(const Json& j, Parse&& parse) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of coefficients");
  std::vector<K> c;
  for (const auto& x : j) c.push_back(parse(x));
  return Polynomial<K>(std::move(c));
}

const std::string& string_field(const Json& j, const char* name) {
  if (!j.contains(name) || !j.at(name).is_string())
    throw std::invalid_argument(std::string("missing string field \"") + name + "\"");
  return j.at(name).get_ref<const std::string&>();
}

template <class K>
Json series_json(const LaurentSeries<K>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_string(c));
  return Json{{"variable", s.variable() == SeriesVariable::q ? "q" : "u"},
              {"min_exp", s.min_exp()},
              {"order", s.order()},
              {"coefficients", coeffs}};
}

}  // namespace

Json to_json(const FieldFunction& f) {
  auto names = parameter_names(f.field());
  Json j = f.visit([&](const auto& g) {
    return Json{{"num", poly_to_json(g.num(), names)}, {"den", poly_to_json(g.den(), names)}};
  });
  j["field"] = std::string(field_name(f.field()));
  return j;
}

FieldFunction function_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("rational function must be a JSON object");
  const Field field = parse_field(string_field(j, "field"));
  if (!j.contains("num") || !j.contains("den")) throw std::invalid_argument("rational function needs num and den");
  auto rational = [](const Json& x) {
    if (!x.is_string()) throw std::invalid_argument("coefficients must be strings");
    return parse_rational(x.get<std::string>());
  };
  switch (field) {
    case Field::Q:
      return QFunction(poly_from_json<Rational>(j["num"], rational), poly_from_json<Rational>(j["den"], rational));
    case Field::Qi: {
      auto gaussian = [](const Json& x) {
        if (!x.is_string()) throw std::invalid_argument("coefficients must be strings");
        return parse_gaussian(x.get<std::string>());
      };
      return QiFunction(poly_from_json<GaussianRational>(j["num"], gaussian),
                        poly_from_json<GaussianRational>(j["den"], gaussian));
    }
    case Field::Qs:
    case Field::Qlambda: {
      auto names = parameter_names(field);
      auto param = [names](const Json& x) {
        if (!x.is_object() || !x.contains("num") || !x.contains("den"))
          throw std::invalid_argument("parameter coefficients need num and den");
        MvPolynomial den = mv_from_json(x["den"], names);
        if (den.is_zero()) throw std::invalid_argument("zero parameter denominator");
        return ParamFraction(mv_from_json(x["num"], names), std::move(den));
      };
      return FieldFunction(field, ParamFunction(poly_from_json<ParamFraction>(j["num"], param),
                                                poly_from_json<ParamFraction>(j["den"], param)));
    }
  }
  throw std::invalid_argument("unknown field");
}

Json to_json(const SeriesRecord& r) {
  return Json{{"geometry", std::string(geometry_name(r.key.geometry))},
              {"degree", r.key.degree},
              {"insertions", to_string(r.key.insertions)},
              {"boundary", r.key.boundary ? Json(*r.key.boundary) : Json(nullptr)},
              {"value", to_json(r.value)},
              {"provenance", std::string(provenance_name(r.provenance))}};
}

SeriesRecord record_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("series record must be a JSON object");
  SeriesRecord r;
  r.key.geometry = parse_geometry(string_field(j, "geometry"));
  if (!j.contains("degree") || !j["degree"].is_number_integer() || j["degree"].get<int>() < 1)
    throw std::invalid_argument("degree must be a positive integer");
  r.key.degree = j["degree"].get<int>();
  r.key.insertions = parse_insertions(string_field(j, "insertions"));
  if (j.contains("boundary") && !j["boundary"].is_null()) {
    if (!j["boundary"].is_string()) throw std::invalid_argument("boundary must be a string or null");
    r.key.boundary = j["boundary"].get<std::string>();
  }
  if (!j.contains("value")) throw std::invalid_argument("missing field \"value\"");
  r.value = function_from_json(j["value"]);
  r.provenance = parse_provenance(string_field(j, "provenance"));
  return r;
}

Json to_json(const LaurentSeries<Rational>& s) { return series_json(s); }
Json to_json(const LaurentSeries<GaussianRational>& s) { return series_json(s); }

std::string export_records(const std::vector<SeriesRecord>& records) {
  Json a = Json::array();
  for (const auto& r : records) a.push_back(to_json(r));
  return a.dump(2) + "\n";
}

std::vector<SeriesRecord> import_records(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  std::vector<SeriesRecord> out;
  if (j.is_array()) {
    for (const auto& x : j) out.push_back(record_from_json(x));
  } else {
    out.push_back(record_from_json(j));
  }
  return out;
}

void load_db_file(const std::string& path, SeriesDB& db) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  for (auto& r : import_records(buffer.str())) db.insert(std::move(r));
}

}  // namespace pdc
