#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kodaira {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomials, selectors, documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input that parses but violates a mathematical precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A germ whose Milnor number is infinite where a finite one is required.
class NonIsolatedError : public DomainError {
 public:
  using DomainError::DomainError;
};

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw DomainError("value " + q.str() + " is not an integer");
  return numerator(q).convert_to<std::int64_t>();
}

/// "p" for integers and "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (is_integer(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

/// Accepts "p", "-p", "p/q"; rejects anything else.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) -> Integer {
    std::size_t i = 0;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      negative = s[0] == '-';
      i = 1;
    }
    if (i >= s.size()) throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer value = 0;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("malformed rational '" + std::string(text) + "'");
      value = value * 10 + (s[i] - '0');
    }
    return negative ? Integer(-value) : value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

}  // namespace kodaira
