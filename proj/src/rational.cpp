#include "pdc/rational.hpp"
#include "pdc/gaussian.hpp"

#include <stdexcept>

namespace pdc {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed rational '" + s + "'");
  bool seen_slash = false;
  bool digit_since_slash = false;
  for (std::size_t k = start; k < s.size(); ++k) {
    char c = s[k];
    if (c == '/' && !seen_slash && digit_since_slash) {
      seen_slash = true;
      digit_since_slash = false;
    } else if (c >= '0' && c <= '9') {
      digit_since_slash = true;
    } else {
      throw std::invalid_argument("malformed rational '" + s + "'");
    }
  }
  if (!digit_since_slash) throw std::invalid_argument("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Integer factorial(int n) {
  if (n < 0) return 0;
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer rising_product(long x, int k) {
  Integer r = 1;
  for (int n = 0; n <= k; ++n) r *= x + n;
  return r;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (pdc::is_zero(norm)) throw std::domain_error("division by zero");
  Rational r = (re_ * o.re_ + im_ * o.im_) / norm;
  Rational m = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

std::string to_string(const GaussianRational& z) {
  std::string out = to_string(z.re());
  if (sgn(z.im()) < 0) {
    out += "-" + to_string(Rational(-z.im()));
  } else {
    out += "+" + to_string(z.im());
  }
  return out + "*i";
}

GaussianRational parse_gaussian(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (s.back() != 'i') return GaussianRational(parse_rational(s));

  // Split off the imaginary term at the last sign that is not leading.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  im_part.pop_back();  // 'i'
  if (!im_part.empty() && im_part.back() == '*') im_part.pop_back();
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return {parse_rational(re_part), parse_rational(im_part)};
}

}  // namespace pdc
