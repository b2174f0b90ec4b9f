#pragma once

#include "pdc/qseries.hpp"

#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace pdc {

/// Coefficient fields of partition functions: Q, Q[i], Q(s1,s2,s3), Q(lambda0..lambda3).
enum class Field { Q, Qi, Qs, Qlambda };

std::string_view field_name(Field f);
Field parse_field(std::string_view name);
/// Parameter names of Qs / Qlambda; empty for Q and Qi.
std::span<const std::string_view> parameter_names(Field f);

using QFunction = RationalFunction<Rational>;
using QiFunction = RationalFunction<GaussianRational>;
using ParamFunction = RationalFunction<ParamFraction>;

// A rational function in q tagged with its coefficient field.
class FieldFunction {
 public:
  FieldFunction() : FieldFunction(QFunction{}) {}
  FieldFunction(QFunction f) : field_(Field::Q), f_(std::move(f)) {}    // NOLINT
  FieldFunction(QiFunction f) : field_(Field::Qi), f_(std::move(f)) {}  // NOLINT
  FieldFunction(Field field, ParamFunction f);

  Field field() const { return field_; }
  bool is_q() const { return field_ == Field::Q; }
  const QFunction& as_q() const;
  const QiFunction& as_qi() const;
  const ParamFunction& as_param() const;

  template <class Visitor>
  decltype(auto) visit(Visitor&& v) const {
    return std::visit(std::forward<Visitor>(v), f_);
  }

  friend bool operator==(const FieldFunction& a, const FieldFunction& b) {
    return a.field_ == b.field_ && a.f_ == b.f_;
  }

 private:
  Field field_;
  std::variant<QFunction, QiFunction, ParamFunction> f_;
};

bool fe_check(const FieldFunction& f, int d_beta, int sign);
bool pole_check(const FieldFunction& f, int d);

std::string to_string(const QFunction& f);
std::string to_string(const QiFunction& f);
std::string to_string(const FieldFunction& f);
std::string to_string(const LaurentSeries<Rational>& s);
std::string to_string(const LaurentSeries<GaussianRational>& s);

/// Parses an arithmetic expression in q over the given field: integers, q, the
/// field's parameters (s1..s3, lambda0..lambda3) or i for Qi, with + - * / ^,
/// parentheses and implicit multiplication ("18(1+q)^3"). Throws ParseError.
FieldFunction parse_function(std::string_view text, Field field = Field::Q);

}  // namespace pdc
