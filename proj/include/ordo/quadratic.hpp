#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordo {

using Rational = boost::multiprecision::cpp_rational;

std::string format_rational(const Rational& r);
/// Parses "p" or "p/q".
Rational parse_rational(std::string_view text);

/// Sign of x + y*sqrt(radicand) for radicand >= 0.
int sign_of_surd(const Rational& x, const Rational& y, const Rational& radicand);

/// Sign of s + u*sqrt(d1) + v*sqrt(d2), exact, via squaring with case
/// analysis. d1 and d2 are positive.
int sign_of_two_surds(const Rational& s, const Rational& u, std::int64_t d1, const Rational& v, std::int64_t d2);

bool is_squarefree(std::int64_t d);

/// The exact real number a + b*sqrt(d), d squarefree > 1, b != 0.
class QuadraticIrrational {
 public:
  QuadraticIrrational(Rational a, Rational b, std::int64_t d);

  /// Parses "a+b√d" (also "a-b√d"; "sqrt" may stand in for "√").
  static QuadraticIrrational parse(std::string_view text);

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  std::int64_t d() const noexcept { return d_; }

  int sign() const { return sign_of_surd(a_, b_, Rational(d_)); }
  QuadraticIrrational scaled(const Rational& factor) const;
  QuadraticIrrational divided(const Rational& divisor) const;
  /// Largest integer not exceeding the value.
  boost::multiprecision::cpp_int floor() const;

  std::string to_string() const;

  friend bool operator==(const QuadraticIrrational&, const QuadraticIrrational&) = default;

 private:
  Rational a_;
  Rational b_;
  std::int64_t d_;
};

std::strong_ordering compare(const QuadraticIrrational& x, const QuadraticIrrational& y);
std::strong_ordering compare(const QuadraticIrrational& x, const Rational& r);

/// q + c*sqrt(d); the image of a rational under f_alpha. c may be zero.
struct ExtendedValue {
  Rational q;
  Rational c;
  std::int64_t d = 2;

  std::string to_string() const;
  friend bool operator==(const ExtendedValue&, const ExtendedValue&) = default;
};

std::strong_ordering compare(const ExtendedValue& x, const ExtendedValue& y);

}  // namespace ordo
