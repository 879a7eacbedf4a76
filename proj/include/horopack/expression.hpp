#pragma once

#include <cctype>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include <horopack/lorentz.hpp>
#include <horopack/volume.hpp>

namespace horopack {

// Evaluator for the closed-form coordinate and volume expressions stored in
// the catalog.  Grammar: + − * /, unary minus, parentheses, decimal numbers,
// the constants pi and catalan, and the functions sqrt, atan, acot, atanh,
// and lob (the function Λ of volume.hpp).
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view src) : src_(src) {}

  double run() {
    double v = expr();
    skip();
    if (pos_ != src_.size())
      throw validation_error("expression: trailing input at '" +
                             std::string(src_.substr(pos_)) + "'");
    if (!std::isfinite(v))
      throw numeric_error("expression: result is not finite");
    return v;
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (eat('*'))
        v *= unary();
      else if (eat('/'))
        v /= unary();
      else
        return v;
    }
  }

  double unary() {
    if (eat('-')) return -unary();
    return atom();
  }

  double atom() {
    skip();
    if (pos_ >= src_.size())
      throw validation_error("expression: unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      double v = expr();
      if (!eat(')'))
        throw validation_error("expression: missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw validation_error("expression: unexpected character '" +
                           std::string(1, c) + "'");
  }

  double number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
            src_[pos_] == '.'))
      ++pos_;
    try {
      return std::stod(std::string(src_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      throw validation_error("expression: bad number literal");
    }
  }

  double identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isalpha(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
    std::string name(src_.substr(start, pos_ - start));
    if (name == "pi") return std::numbers::pi;
    if (name == "catalan") return catalan();
    if (!eat('('))
      throw validation_error("expression: unknown constant '" + name + "'");
    double arg = expr();
    if (!eat(')'))
      throw validation_error("expression: missing ')' after argument");
    if (name == "sqrt") {
      if (arg < 0.0)
        throw numeric_error("expression: sqrt of a negative value");
      return std::sqrt(arg);
    }
    if (name == "atan") return std::atan(arg);
    if (name == "acot") {
      if (arg <= 0.0)
        throw numeric_error("expression: acot requires a positive argument");
      return std::atan(1.0 / arg);
    }
    if (name == "atanh") return std::atanh(arg);
    if (name == "lob") return lobachevsky(arg);
    throw validation_error("expression: unknown function '" + name + "'");
  }
};

inline double evaluate_expression(std::string_view src) {
  return ExpressionParser(src).run();
}

}  // namespace horopack
