#include "skewhopf/rational.hpp"

#include <cctype>

#include "skewhopf/error.hpp"

namespace skewhopf {

namespace {

BigInt parse_integer(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError(offset + 1, "expected integer");
  BigInt value = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError(offset + k + 1, std::string("unexpected character '") + ch + "'");
    }
    value = value * 10 + (ch - '0');
  }
  return value;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw Error(ErrorCode::BadParams, "zero denominator");
  if (denominator < 0) {
    value_ = boost::multiprecision::cpp_rational(-numerator, -denominator);
  } else {
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
  }
}

Rational Rational::parse(std::string_view text) {
  std::size_t offset = 0;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    offset = 1;
  }
  const std::string_view body = text.substr(offset);
  const auto slash = body.find('/');
  BigInt num = parse_integer(body.substr(0, slash), offset);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(body.substr(slash + 1), offset + slash + 1);
    if (den == 0) throw ParseError(offset + slash + 2, "zero denominator");
  }
  Rational r(num, den);
  return negative ? -r : r;
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::BadParams, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rational::hash() const {
  return std::hash<std::string>{}(to_string());
}

}  // namespace skewhopf
