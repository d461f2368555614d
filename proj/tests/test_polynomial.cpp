#include <gtest/gtest.h>

#include <random>

#include "kodaira/polynomial.hpp"

using namespace kodaira;

namespace {
const std::vector<std::string> kZXYW{"z", "x", "y", "w"};
}

TEST(ParsePolynomial, ReadsTermsAndDegree) {
  auto p = parse_polynomial("z^3 + x^2 + y^2 + w^2", kZXYW);
  EXPECT_EQ(p.size(), 4u);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.order(), 2);
  EXPECT_EQ(p.coefficient({3, 0, 0, 0}), 1);
}

TEST(ParsePolynomial, CancellationGivesZero) {
  auto p = parse_polynomial("x - x", {"x"});
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.to_string(), "0");
}

TEST(ParsePolynomial, RationalCoefficientsAndProducts) {
  auto p = parse_polynomial("-3/2*x*y^2 + 2*x*x - 1/3", {"x", "y"});
  EXPECT_EQ(p.coefficient({1, 2}), Rational(-3, 2));
  EXPECT_EQ(p.coefficient({2, 0}), 2);
  EXPECT_EQ(p.constant_term(), Rational(-1, 3));
}

TEST(ParsePolynomial, Errors) {
  EXPECT_THROW(parse_polynomial("x^(2)", {"x"}), ParseError);
  EXPECT_THROW(parse_polynomial("", {"x"}), ParseError);
  EXPECT_THROW(parse_polynomial("   ", {"x"}), ParseError);
  EXPECT_THROW(parse_polynomial("x + q", {"x"}), ParseError);
  EXPECT_THROW(parse_polynomial("2x", {"x"}), ParseError);
  EXPECT_THROW(parse_polynomial("x^", {"x"}), ParseError);
  EXPECT_THROW(parse_polynomial("x + ", {"x"}), ParseError);
  EXPECT_THROW(parse_polynomial("1/0*x", {"x"}), ParseError);
  EXPECT_THROW(parse_polynomial("x", {"x", "x"}), ParseError);
}

TEST(Polynomial, DerivativeIsTermwise) {
  auto f = parse_polynomial("x^2*y", {"x", "y"});
  EXPECT_EQ(f.derivative(0), parse_polynomial("2*x*y", {"x", "y"}));
  EXPECT_EQ(f.derivative(1), parse_polynomial("x^2", {"x", "y"}));
}

TEST(Polynomial, ArithmeticOverDifferentVariablesThrows) {
  auto a = parse_polynomial("x", {"x"});
  auto b = parse_polynomial("y", {"y"});
  EXPECT_THROW(a + b, DomainError);
}

// parse(print(parse(s))) == parse(s) over random polynomials.
TEST(ParsePolynomial, PrintParseFixedPoint) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-9, 9), den(1, 5), expo(0, 4), count(0, 6);
  std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 300; ++trial) {
    Polynomial p(vars);
    int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
      Exponent e{static_cast<std::uint32_t>(expo(rng)), static_cast<std::uint32_t>(expo(rng)),
                 static_cast<std::uint32_t>(expo(rng))};
      p.add_term(e, Rational(coeff(rng), den(rng)));
    }
    std::string printed = p.to_string();
    auto reparsed = parse_polynomial(printed, vars);
    EXPECT_EQ(reparsed, p) << printed;
    EXPECT_EQ(reparsed.to_string(), printed);
  }
}
