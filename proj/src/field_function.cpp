#include "pdc/field_function.hpp"

#include "pdc/errors.hpp"

#include <array>
#include <cctype>
#include <functional>
#include <optional>

namespace pdc {

namespace {

constexpr std::array<std::string_view, 3> kSNames{"s1", "s2", "s3"};
constexpr std::array<std::string_view, 4> kLambdaNames{"lambda0", "lambda1", "lambda2", "lambda3"};

struct CoeffText {
  bool negative = false;
  bool unit = false;  // magnitude 1, may be omitted before q^n
  std::string body;
};

CoeffText coeff_text(const Rational& c, std::span<const std::string_view> /*names*/) {
  Rational mag = abs(c);
  return {sgn(c) < 0, mag == 1, to_string(mag)};
}

CoeffText coeff_text(const GaussianRational& z, std::span<const std::string_view> names) {
  if (z.is_real()) return coeff_text(z.re(), names);
  if (is_zero(z.re())) {
    Rational mag = abs(z.im());
    return {sgn(z.im()) < 0, false, mag == 1 ? std::string("i") : to_string(mag) + "*i"};
  }
  return {false, false, "(" + to_string(z) + ")"};
}

CoeffText coeff_text(const ParamFraction& x, std::span<const std::string_view> names) {
  if (x.is_constant()) return coeff_text(Rational(x.num().constant() / x.den().constant()), names);
  return {false, false, "(" + x.to_string(names) + ")"};
}

std::string power_text(std::string_view var, int n) {
  if (n == 1) return std::string(var);
  return std::string(var) + "^" + std::to_string(n);
}

template <class K>
std::string terms_text(const std::vector<std::pair<int, K>>& terms, std::string_view var,
                       std::span<const std::string_view> names) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [n, c] : terms) {
    CoeffText t = coeff_text(c, names);
    if (first) {
      if (t.negative) out += "-";
    } else {
      out += t.negative ? " - " : " + ";
    }
    if (n == 0) {
      out += t.body;
    } else if (t.unit) {
      out += power_text(var, n);
    } else {
      out += t.body + "*" + power_text(var, n);
    }
    first = false;
  }
  return out;
}

template <class K>
std::string poly_text(const Polynomial<K>& p, std::span<const std::string_view> names) {
  std::vector<std::pair<int, K>> terms;
  for (int n = 0; n <= p.degree(); ++n)
    if (!is_zero(p.coeff(n))) terms.emplace_back(n, p.coeff(n));
  return terms_text(terms, "q", names);
}

template <class K>
std::string rf_text(const RationalFunction<K>& f, std::span<const std::string_view> names) {
  std::string n = poly_text(f.num(), names);
  if (f.is_polynomial()) return n;
  auto count_terms = [](const Polynomial<K>& p) {
    int k = 0;
    for (const auto& c : p.coefficients()) k += is_zero(c) ? 0 : 1;
    return k;
  };
  if (count_terms(f.num()) > 1) n = "(" + n + ")";
  std::string d = poly_text(f.den(), names);
  if (count_terms(f.den()) > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

template <class K>
std::string series_text(const LaurentSeries<K>& s) {
  std::string_view var = s.variable() == SeriesVariable::q ? "q" : "u";
  std::vector<std::pair<int, K>> terms;
  for (int n = s.valuation(); n < s.order(); ++n)
    if (!is_zero(s.coeff(n))) terms.emplace_back(n, s.coeff(n));
  std::string out = terms_text(terms, var, {});
  return out + " + O(" + power_text(var, s.order()) + ")";
}

// Recursive-descent parser for rational-function expressions over K.
template <CoefficientField K>
class ExprParser {
 public:
  using RF = RationalFunction<K>;
  using Resolver = std::function<std::optional<K>(std::string_view)>;

  ExprParser(std::string_view text, Resolver symbols) : text_(text), symbols_(std::move(symbols)) {}

  RF parse() {
    RF r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(text_, pos_, msg); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool starts_primary() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  RF expr() {
    RF r;
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    r = term();
    if (negate) r = -r;
    while (peek('+') || peek('-')) {
      bool minus = text_[pos_++] == '-';
      RF t = term();
      r = minus ? r - t : r + t;
    }
    return r;
  }

  RF term() {
    RF r = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        r = r * factor();
      } else if (peek('/')) {
        std::size_t at = pos_++;
        RF d = factor();
        if (d.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        r = r / d;
      } else if (starts_primary()) {
        r = r * factor();
      } else {
        return r;
      }
    }
  }

  RF factor() {
    if (peek('-')) {
      ++pos_;
      return -factor();
    }
    RF base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip();
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (e > 4096) fail("exponent too large");
    RF r = RF::constant(K(1));
    for (int k = 0; k < e; ++k) r = r * base;
    if (negative) {
      if (r.is_zero()) fail("negative power of zero");
      r = RF::constant(K(1)) / r;
    }
    return r;
  }

  RF primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RF r = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RF::constant(K(Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "q") return RF(Polynomial<K>::q());
      if (auto v = symbols_(name)) return RF::constant(*v);
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string text_;
  Resolver symbols_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view field_name(Field f) {
  switch (f) {
    case Field::Q: return "Q";
    case Field::Qi: return "Qi";
    case Field::Qs: return "Q_s";
    case Field::Qlambda: return "Q_lambda";
  }
  return "?";
}

Field parse_field(std::string_view name) {
  for (Field f : {Field::Q, Field::Qi, Field::Qs, Field::Qlambda})
    if (field_name(f) == name) return f;
  throw std::invalid_argument("unknown field '" + std::string(name) + "'");
}

std::span<const std::string_view> parameter_names(Field f) {
  switch (f) {
    case Field::Qs: return kSNames;
    case Field::Qlambda: return kLambdaNames;
    default: return {};
  }
}

FieldFunction::FieldFunction(Field field, ParamFunction f) : field_(field), f_(std::move(f)) {
  if (field != Field::Qs && field != Field::Qlambda)
    throw std::invalid_argument("parameter functions must be over Q_s or Q_lambda");
}

const QFunction& FieldFunction::as_q() const {
  if (field_ != Field::Q) throw std::logic_error("series is over " + std::string(field_name(field_)) + ", not Q");
  return std::get<QFunction>(f_);
}

const QiFunction& FieldFunction::as_qi() const {
  if (field_ != Field::Qi) throw std::logic_error("series is over " + std::string(field_name(field_)) + ", not Qi");
  return std::get<QiFunction>(f_);
}

const ParamFunction& FieldFunction::as_param() const {
  if (!std::holds_alternative<ParamFunction>(f_)) throw std::logic_error("series has no parameters");
  return std::get<ParamFunction>(f_);
}

bool fe_check(const FieldFunction& f, int d_beta, int sign) {
  return f.visit([&](const auto& g) { return fe_check(g, d_beta, sign); });
}

bool pole_check(const FieldFunction& f, int d) {
  return f.visit([&](const auto& g) { return pole_check(g, d); });
}

std::string to_string(const QFunction& f) { return rf_text(f, {}); }
std::string to_string(const QiFunction& f) { return rf_text(f, {}); }
std::string to_string(const FieldFunction& f) {
  auto names = parameter_names(f.field());
  return f.visit([&](const auto& g) { return rf_text(g, names); });
}
std::string to_string(const LaurentSeries<Rational>& s) { return series_text(s); }
std::string to_string(const LaurentSeries<GaussianRational>& s) { return series_text(s); }

FieldFunction parse_function(std::string_view text, Field field) {
  switch (field) {
    case Field::Q:
      return ExprParser<Rational>(text, [](std::string_view) { return std::optional<Rational>{}; }).parse();
    case Field::Qi:
      return ExprParser<GaussianRational>(text, [](std::string_view name) {
               return name == "i" ? std::optional<GaussianRational>(GaussianRational::i()) : std::nullopt;
             }).parse();
    case Field::Qs:
    case Field::Qlambda: {
      auto names = parameter_names(field);
      auto resolve = [names](std::string_view name) -> std::optional<ParamFraction> {
        for (std::size_t k = 0; k < names.size(); ++k)
          if (names[k] == name) return ParamFraction::variable(k);
        return std::nullopt;
      };
      return FieldFunction(field, ExprParser<ParamFraction>(text, resolve).parse());
    }
  }
  throw std::invalid_argument("unknown field");
}

}  // namespace pdc
