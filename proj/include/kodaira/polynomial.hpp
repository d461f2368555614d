#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kodaira/rational.hpp"

namespace kodaira {

using Exponent = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

inline bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponent exponent_lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exponent exponent_sub(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Exponent exponent_add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored.
/// The variable list is part of the value: arithmetic between polynomials
/// over different variable lists is an error.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

  static Polynomial constant(std::vector<std::string> variables, const Rational& c) {
    Polynomial p(std::move(variables));
    p.add_term(Exponent(p.num_variables(), 0), c);
    return p;
  }

  static Polynomial monomial(std::vector<std::string> variables, Exponent e, const Rational& c = 1) {
    Polynomial p(std::move(variables));
    if (e.size() != p.num_variables()) throw DomainError("exponent length does not match variable count");
    p.add_term(std::move(e), c);
    return p;
  }

  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t num_variables() const { return variables_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
    return d;
  }

  /// Smallest total degree of a term (the order at the origin); -1 for zero.
  int order() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int t = static_cast<int>(total_degree(e));
      d = d < 0 ? t : std::min(d, t);
    }
    return d;
  }

  Rational coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational constant_term() const { return coefficient(Exponent(num_variables(), 0)); }

  void add_term(Exponent e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial derivative(std::size_t var) const {
    Polynomial d(variables_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponent de = e;
      de[var] -= 1;
      d.add_term(std::move(de), c * e[var]);
    }
    return d;
  }

  /// c * x^shift * (*this)
  Polynomial scaled_shift(const Rational& c, const Exponent& shift) const {
    Polynomial r(variables_);
    if (c == 0) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(exponent_add(e, shift), coeff * c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.variables_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(exponent_add(ea, eb), ca * cb);
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    return p.scaled_shift(c, Exponent(p.num_variables(), 0));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

  /// Terms in descending degree-lexicographic order, e.g. "x^2*y - 3/2*z + 1".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> sorted;
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
      auto da = total_degree(a->first), db = total_degree(b->first);
      if (da != db) return da > db;
      return a->first > b->first;
    });
    std::string out;
    bool first = true;
    for (const auto* t : sorted) {
      const Rational& c = t->second;
      bool negative = c < 0;
      Rational mag = negative ? Rational(-c) : c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (t->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += variables_[i];
        if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
      }
      if (mono.empty())
        out += kodaira::to_string(mag);
      else if (mag == 1)
        out += mono;
      else
        out += kodaira::to_string(mag) + "*" + mono;
    }
    return out;
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (variables_ != o.variables_) throw DomainError("polynomials over different variable lists");
  }

  std::vector<std::string> variables_;
  TermMap terms_;
};

namespace detail {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const std::vector<std::string>& variables)
      : text_(text), variables_(variables) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty polynomial expression");
    Polynomial result(variables_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    accumulate_term(result, negative);
    skip_ws();
    while (pos_ < text_.size()) {
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      accumulate_term(result, op == '-');
      skip_ws();
    }
    return result;
  }

 private:
  void accumulate_term(Polynomial& result, bool negative) {
    Rational coeff = negative ? -1 : 1;
    Exponent e(variables_.size(), 0);
    parse_factor(coeff, e);
    skip_ws();
    while (pos_ < text_.size() && peek() == '*') {
      ++pos_;
      parse_factor(coeff, e);
      skip_ws();
    }
    result.add_term(std::move(e), coeff);
  }

  void parse_factor(Rational& coeff, Exponent& e) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_digits();
      Integer den = 1;
      if (pos_ < text_.size() && peek() == '/') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed rational literal");
        den = parse_digits();
        if (den == 0) fail("zero denominator");
      }
      if (pos_ < text_.size() && peek() == '^') fail("exponent on a numeric literal");
      coeff *= Rational(num, den);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(variables_.begin(), variables_.end(), name);
      if (it == variables_.end()) throw ParseError("unknown symbol '" + name + "'");
      std::uint32_t power = 1;
      if (pos_ < text_.size() && peek() == '^') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
        power = parse_digits().convert_to<std::uint32_t>();
      }
      e[static_cast<std::size_t>(it - variables_.begin())] += power;
      return;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Integer parse_digits() {
    Integer v = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      ++pos_;
      if (++digits > 4000) fail("numeric literal too long");
    }
    return v;
  }

  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& variables_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: sums of `*`-products of integer or `p/q` literals and declared
/// variables with optional `^n` exponents. No parentheses, no implicit
/// multiplication.
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  for (std::size_t i = 0; i < variables.size(); ++i)
    for (std::size_t j = i + 1; j < variables.size(); ++j)
      if (variables[i] == variables[j]) throw ParseError("duplicate variable '" + variables[i] + "'");
  return detail::PolynomialParser(text, variables).parse();
}

}  // namespace kodaira
