#include <gtest/gtest.h>

#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "ordo/quadratic.hpp"

using namespace ordo;
using Decimal = boost::multiprecision::cpp_dec_float_100;

namespace {

Decimal value(const QuadraticIrrational& x) {
  return Decimal(x.a()) + Decimal(x.b()) * boost::multiprecision::sqrt(Decimal(x.d()));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  return Rational(num(rng), den(rng));
}

QuadraticIrrational random_qi(std::mt19937_64& rng) {
  static const std::int64_t squarefree[] = {2, 3, 5, 6, 7, 10, 11};
  std::uniform_int_distribution<int> pick(0, 6);
  Rational b = 0;
  while (b == 0) b = random_rational(rng);
  return QuadraticIrrational(random_rational(rng), b, squarefree[pick(rng)]);
}

int decimal_sign(const Decimal& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

TEST(Quadratic, ParseAndPrint) {
  EXPECT_EQ(QuadraticIrrational::parse("0+1√2").to_string(), "0+1√2");
  EXPECT_EQ(QuadraticIrrational::parse("1/2-3/4√5").to_string(), "1/2-3/4√5");
  EXPECT_EQ(QuadraticIrrational::parse("0+1sqrt3"), QuadraticIrrational(0, 1, 3));
  EXPECT_THROW(QuadraticIrrational::parse("0+1√4"), std::invalid_argument);
  EXPECT_THROW(QuadraticIrrational::parse("1+0√2"), std::invalid_argument);
  EXPECT_THROW(QuadraticIrrational::parse("abc"), std::invalid_argument);
}

TEST(Quadratic, SquarefreeTest) {
  EXPECT_TRUE(is_squarefree(2));
  EXPECT_TRUE(is_squarefree(30));
  EXPECT_FALSE(is_squarefree(12));
  EXPECT_FALSE(is_squarefree(1));
}

TEST(Quadratic, ComparisonsAgreeWithHighPrecision) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 3000; ++t) {
    const auto x = random_qi(rng), y = random_qi(rng);
    const int expected = decimal_sign(value(x) - value(y));
    const auto c = compare(x, y);
    EXPECT_EQ(c < 0 ? -1 : (c > 0 ? 1 : 0), expected) << x.to_string() << " vs " << y.to_string();
    const auto r = random_rational(rng);
    const auto cr = compare(x, r);
    EXPECT_EQ(cr < 0 ? -1 : 1, decimal_sign(value(x) - Decimal(r)));
    EXPECT_EQ(x.sign(), decimal_sign(value(x)));
  }
}

TEST(Quadratic, FloorIsExact) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 2000; ++t) {
    const auto x = random_qi(rng);
    const auto fl = x.floor();
    EXPECT_LE(Decimal(fl), value(x));
    EXPECT_GT(Decimal(fl) + 1, value(x));
  }
  // Near an integer: 1 - (sqrt(2) - 1)^20 scaled out in rational form is hard to
  // build by hand; use a large multiple instead.
  EXPECT_EQ(QuadraticIrrational(0, 1000000, 2).floor(), 1414213);
}

TEST(Quadratic, CrossRadicandExamples) {
  const auto r2 = QuadraticIrrational(0, 1, 2), r3 = QuadraticIrrational(0, 1, 3);
  EXPECT_TRUE(compare(r2, r3) < 0);
  EXPECT_TRUE(compare(r2, Rational(3, 2)) < 0);
  EXPECT_TRUE(compare(r3, Rational(3, 2)) > 0);
  EXPECT_EQ(sign_of_two_surds(0, 1, 2, 1, 3), 1);
  EXPECT_EQ(sign_of_two_surds(Rational(-1), 1, 2, Rational(-1, 3), 3), -1);  // sqrt2 - 1 - sqrt3/3 < 0
}

TEST(Quadratic, ExtendedValues) {
  EXPECT_TRUE(compare(ExtendedValue{0, 2, 2}, ExtendedValue{3, 0, 2}) < 0);  // 2 sqrt2 < 3
  EXPECT_TRUE(compare(ExtendedValue{1, 1, 2}, ExtendedValue{1, 1, 2}) == 0);
  EXPECT_TRUE(compare(ExtendedValue{0, 1, 2}, ExtendedValue{1, 0, 2}) > 0);
}
