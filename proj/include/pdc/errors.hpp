#pragma once

#include <stdexcept>
#include <string>

namespace pdc {

// Syntax error in descendent or rational-function input; position is a 0-based
// byte offset into the text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string text, std::size_t position, const std::string& message)
      : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
        text_(std::move(text)),
        position_(position) {}

  const std::string& text() const { return text_; }
  std::size_t position() const { return position_; }

  /// The input with a caret under the offending character.
  std::string annotated() const { return text_ + "\n" + std::string(position_, ' ') + "^"; }

 private:
  std::string text_;
  std::size_t position_;
};

// A reduction needed a partition function that is not in the database.
class UnknownSeries : public std::runtime_error {
 public:
  explicit UnknownSeries(const std::string& key) : std::runtime_error("unknown series: " + key) {}
};

}  // namespace pdc
