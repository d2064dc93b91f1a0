#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liealg {

/// Arbitrary-precision exact rational; the default scalar of the library.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input; `position` is the 0-based offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Canonical text: "p" for integers, "p/q" otherwise (q > 0, lowest terms).
inline std::string to_string(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    pos = 1;
  }
  if (pos == s.size()) throw ParseError("empty integer in '" + std::string(whole) + "'", 0);
  Integer value = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw ParseError("invalid digit in '" + std::string(whole) + "'", pos);
    value = value * 10 + (s[pos] - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace detail

/// Parses "p", "p/q" or a finite decimal such as "-1.25" exactly.
inline Rational parse_rational(std::string_view text) {
  const std::string_view s = detail::trim(text);
  if (s.empty()) throw ParseError("empty rational", 0);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = detail::parse_integer(detail::trim(s.substr(0, slash)), s);
    Integer den = detail::parse_integer(detail::trim(s.substr(slash + 1)), s);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'", slash + 1);
    return Rational(num, den);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string digits(s.substr(0, dot));
    std::string frac(s.substr(dot + 1));
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("invalid decimal '" + std::string(s) + "'", dot);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    Integer den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool negative = digits[0] == '-';
    Integer whole = detail::parse_integer(digits, s);
    Integer part = detail::parse_integer(frac, s);
    Integer num = (negative ? -whole : whole) * den + part;
    return Rational(negative ? Integer(-num) : num, den);
  }
  return Rational(detail::parse_integer(s, s));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace liealg
