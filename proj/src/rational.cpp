#include "ordfix/rational.hpp"

#include <cctype>
#include <cmath>

#include "ordfix/error.hpp"

namespace ordfix {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorKind::BadParams, "not a rational: '" + std::string(whole) + "'");
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

BigInt pow10(long exponent) {
  BigInt result = 1;
  for (long i = 0; i < exponent; ++i) result *= 10;
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorKind::BadParams, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorKind::BadParams, "zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    BigInt exp_value = parse_integer(text.substr(e + 1), whole);
    if (abs(exp_value) > 400) throw Error(ErrorKind::BadParams, "exponent out of range in '" + std::string(whole) + "'");
    exponent = exp_value.convert_to<long>();
    text = text.substr(0, e);
  }

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw Error(ErrorKind::BadParams, "not a rational: '" + std::string(whole) + "'");
    digits = std::string(ip) + std::string(fp);
    fraction_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(text)) throw Error(ErrorKind::BadParams, "not a rational: '" + std::string(whole) + "'");
    digits = std::string(text);
  }

  Rational value{BigInt{digits}};
  long shift = exponent - fraction_digits;
  if (shift > 0) value *= pow10(shift);
  if (shift < 0) value /= pow10(-shift);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::BadParams, "non-finite value has no rational form");
  int exponent = 0;
  double mantissa = std::frexp(value, &exponent);
  // 53 bits of mantissa become an exact integer.
  auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result(scaled);
  if (exponent > 0) result *= Rational(BigInt(1) << exponent);
  if (exponent < 0) result /= Rational(BigInt(1) << -exponent);
  return result;
}

}  // namespace ordfix
