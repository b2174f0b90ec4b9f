#include "pdc/descendents.hpp"

#include "pdc/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pdc {

Generator::Generator(int i_, int j_) : i(i_), j(j_) {
  if (i < 0) throw std::invalid_argument("generator subscript must be nonnegative");
  if (j < 0 || j > 3) throw std::invalid_argument("generator class must be H^0..H^3");
}

Generator from_tau(int k, int j) {
  if (k < 0) throw std::invalid_argument("tau subscript must be nonnegative");
  return {k + 2, j};
}

Monomial::Monomial(std::vector<Generator> factors) : f_(std::move(factors)) { std::sort(f_.begin(), f_.end()); }

int Monomial::count(const Generator& g) const { return static_cast<int>(std::count(f_.begin(), f_.end(), g)); }

Monomial Monomial::without(std::size_t k) const {
  Monomial r = *this;
  r.f_.erase(r.f_.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.f_.reserve(a.f_.size() + b.f_.size());
  std::merge(a.f_.begin(), a.f_.end(), b.f_.begin(), b.f_.end(), std::back_inserter(r.f_));
  return r;
}

int degree(const Monomial& m) {
  int d = 0;
  for (const auto& g : m.factors()) d += g.i + g.j - 3;
  return d;
}

DescElement::DescElement(const Monomial& m, const Rational& c) { add(m, c); }

Rational DescElement::coeff(const Monomial& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? Rational(0) : it->second;
}

void DescElement::add(const Monomial& m, const Rational& c) {
  if (pdc::is_zero(c)) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (pdc::is_zero(it->second)) t_.erase(it);
}

DescElement& DescElement::operator+=(const DescElement& o) {
  for (const auto& [m, c] : o.t_) add(m, c);
  return *this;
}

DescElement& DescElement::operator-=(const DescElement& o) {
  for (const auto& [m, c] : o.t_) add(m, -c);
  return *this;
}

DescElement& DescElement::operator*=(const Rational& c) {
  if (pdc::is_zero(c)) {
    t_.clear();
    return *this;
  }
  for (auto& [m, x] : t_) x *= c;
  return *this;
}

DescElement operator*(const DescElement& a, const DescElement& b) {
  DescElement r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.add(ma * mb, ca * cb);
  return r;
}

DescElement normalize(const DescElement& e) {
  DescElement r;
  for (const auto& [m, c] : e.terms()) {
    Rational coeff = c;
    std::vector<Generator> kept;
    bool dead = false;
    for (const auto& g : m.factors()) {
      if (g.i == 0 && g.j == 3) {
        coeff = -coeff;
      } else if (g.i <= 1) {
        dead = true;
        break;
      } else {
        kept.push_back(g);
      }
    }
    if (!dead) r.add(Monomial(std::move(kept)), coeff);
  }
  return r;
}

DescElement kunneth_expand(int a, int b, int j) {
  if (a < 0 || b < 0) throw std::invalid_argument("kunneth_expand: subscripts must be nonnegative");
  DescElement r;
  for (int k = 0; k <= 3 - j; ++k) r.add(Monomial{Generator(a, k + j), Generator(b, 3 - k)}, 1);
  return r;
}

std::string_view class_name(int j) {
  static constexpr std::string_view names[] = {"1", "H", "L", "p"};
  return names[j];
}

std::string to_string(const Generator& g) {
  return "ch" + std::to_string(g.i) + "(" + std::string(class_name(g.j)) + ")";
}

std::string to_string(const Monomial& m) {
  if (m.empty()) return "1";
  std::string out;
  for (const auto& g : m.factors()) {
    if (!out.empty()) out += "*";
    out += to_string(g);
  }
  return out;
}

std::string to_string(const DescElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : e.terms()) {
    bool negative = sgn(c) < 0;
    Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += to_string(m);
    } else {
      out += to_string(mag) + "*" + to_string(m);
    }
  }
  return out;
}

namespace {

class DescParser {
 public:
  explicit DescParser(std::string_view text) : text_(text) {}

  DescElement parse() {
    skip();
    if (pos_ == text_.size()) fail("empty descendent expression");
    DescElement r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(text_, pos_, msg); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip();
    if (text_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(text_.substr(start, pos_ - start));
  }

  DescElement expr() {
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    DescElement r = term();
    if (negative) r = -r;
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  DescElement term() {
    DescElement r = factor();
    while (accept('*')) r = r * factor();
    return r;
  }

  DescElement factor() {
    DescElement base = primary();
    if (!accept('^')) return base;
    int e = integer();
    DescElement r = DescElement::constant(1);
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
  }

  DescElement primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      DescElement r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(std::string(text_.substr(pos_, digits_from(pos_))));
      pos_ += digits_from(pos_);
      Rational value(num);
      std::size_t save = pos_;
      if (accept('/')) {
        skip();
        std::size_t n = digits_from(pos_);
        if (n == 0) {
          // "a/b" only; anything else is a division we do not support
          fail("expected denominator digits");
        }
        Integer den(std::string(text_.substr(pos_, n)));
        if (den == 0) fail("zero denominator");
        pos_ += n;
        value /= Rational(den);
      } else {
        pos_ = save;
      }
      return DescElement::constant(value);
    }
    int shift = 0;
    if (accept_word("ch")) {
      shift = 0;
    } else if (accept_word("tau")) {
      shift = 2;
    } else {
      fail("expected ch or tau");
    }
    if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
    bool braced = accept('{');
    int i = integer() + shift;
    if (braced) expect('}');
    expect('(');
    int j = cohomology_class();
    expect(')');
    return DescElement(Monomial{Generator(i, j)});
  }

  int cohomology_class() {
    skip();
    if (accept('1')) return 0;
    if (accept('L')) return 2;
    if (accept('p')) return 3;
    if (accept('H')) {
      if (!accept('^')) return 1;
      skip();
      std::size_t at = pos_;
      int e = integer();
      if (e > 3) {
        pos_ = at;
        fail("H^j needs j <= 3");
      }
      return e;
    }
    fail("expected a class 1, H, L, p or H^j");
  }

  std::size_t digits_from(std::size_t p) const {
    std::size_t n = 0;
    while (p + n < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p + n]))) ++n;
    return n;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

DescElement parse_desc(std::string_view text) { return DescParser(text).parse(); }

Monomial parse_monomial(std::string_view text) {
  DescElement e = parse_desc(text);
  if (e.terms().size() != 1 || e.terms().begin()->second != 1)
    throw ParseError(std::string(text), 0, "expected a single monomial with coefficient 1");
  return e.terms().begin()->first;
}

}  // namespace pdc
