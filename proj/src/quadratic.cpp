#include "ordo/quadratic.hpp"

#include <cmath>
#include <stdexcept>

#include "ordo/group.hpp"

namespace ordo {

namespace {

int sign(const Rational& r) { return r.sign(); }

std::strong_ordering to_ordering(int s) {
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

constexpr std::string_view kRadical = "\xE2\x88\x9A";  // U+221A

}  // namespace

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_integer = [](std::string_view s, std::size_t offset) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw ParseError("expected digits", offset + i);
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw ParseError("expected digit", offset + k);
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return boost::multiprecision::cpp_int(digits);
  };
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
  const auto num = parse_integer(text.substr(0, slash), 0);
  const auto den = parse_integer(text.substr(slash + 1), slash + 1);
  if (den <= 0) throw ParseError("denominator must be positive", slash + 1);
  return Rational(num, den);
}

int sign_of_surd(const Rational& x, const Rational& y, const Rational& radicand) {
  const int sx = sign(x);
  const int sy = radicand == 0 ? 0 : sign(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // Opposite signs: the term with the larger square wins.
  const Rational lhs = x * x;
  const Rational rhs = y * y * radicand;
  if (lhs > rhs) return sx;
  if (lhs < rhs) return sy;
  return 0;
}

int sign_of_two_surds(const Rational& s, const Rational& u, std::int64_t d1, const Rational& v, std::int64_t d2) {
  if (d1 == d2) return sign_of_surd(s, u + v, Rational(d1));
  const int su = sign(u);
  const int sv = sign(v);
  int sw = 0;  // sign of w = u sqrt(d1) + v sqrt(d2)
  if (su == 0) {
    sw = sv;
  } else if (sv == 0 || su == sv) {
    sw = su;
  } else {
    const Rational a = u * u * d1;
    const Rational b = v * v * d2;
    sw = a > b ? su : (a < b ? sv : 0);
  }
  const int ss = sign(s);
  if (ss == 0) return sw;
  if (sw == 0 || ss == sw) return ss;
  // Compare s^2 with w^2 = u^2 d1 + v^2 d2 + 2uv sqrt(d1 d2).
  const Rational t = s * s - u * u * d1 - v * v * d2;
  const int diff = sign_of_surd(t, -2 * u * v, Rational(d1) * d2);
  if (diff > 0) return ss;
  if (diff < 0) return sw;
  return 0;
}

bool is_squarefree(std::int64_t d) {
  if (d < 2) return false;
  for (std::int64_t p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

QuadraticIrrational::QuadraticIrrational(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (b_ == 0) throw std::invalid_argument("quadratic irrational needs a nonzero surd coefficient");
  if (!is_squarefree(d_)) throw std::invalid_argument("radicand " + std::to_string(d_) + " is not squarefree > 1");
}

QuadraticIrrational QuadraticIrrational::parse(std::string_view text) {
  std::size_t radical = text.find(kRadical);
  std::size_t radical_len = kRadical.size();
  if (radical == std::string_view::npos) {
    radical = text.find("sqrt");
    radical_len = 4;
  }
  if (radical == std::string_view::npos) throw ParseError("expected '\xE2\x88\x9A' in quadratic irrational", 0);
  const std::string_view head = text.substr(0, radical);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < head.size(); ++i)
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] >= '0' && head[i - 1] <= '9') {
      split = i;
      break;
    }
  if (split == std::string_view::npos) throw ParseError("expected 'a+b' before the radical", 0);
  Rational a = parse_rational(head.substr(0, split));
  std::string_view b_text = head.substr(head[split] == '+' ? split + 1 : split);
  Rational b = parse_rational(b_text);
  const std::string_view d_text = text.substr(radical + radical_len);
  if (d_text.empty()) throw ParseError("expected radicand", radical + radical_len);
  for (std::size_t i = 0; i < d_text.size(); ++i)
    if (d_text[i] < '0' || d_text[i] > '9') throw ParseError("expected digit in radicand", radical + radical_len + i);
  return QuadraticIrrational(std::move(a), std::move(b), std::stoll(std::string(d_text)));
}

QuadraticIrrational QuadraticIrrational::scaled(const Rational& factor) const {
  return QuadraticIrrational(a_ * factor, b_ * factor, d_);
}

QuadraticIrrational QuadraticIrrational::divided(const Rational& divisor) const {
  if (divisor == 0) throw std::domain_error("division by zero");
  return QuadraticIrrational(a_ / divisor, b_ / divisor, d_);
}

boost::multiprecision::cpp_int QuadraticIrrational::floor() const {
  // Floating-point estimate, then exact correction.
  const long double approx =
      a_.convert_to<long double>() + b_.convert_to<long double>() * std::sqrt(static_cast<long double>(d_));
  boost::multiprecision::cpp_int n(static_cast<long long>(std::floor(approx)));
  while (compare(*this, Rational(n)) < 0) --n;
  while (compare(*this, Rational(n + 1)) >= 0) ++n;
  return n;
}

std::string QuadraticIrrational::to_string() const {
  const char* sign = b_ < 0 ? "-" : "+";
  return format_rational(a_) + sign + format_rational(abs(b_)) + std::string(kRadical) + std::to_string(d_);
}

std::strong_ordering compare(const QuadraticIrrational& x, const QuadraticIrrational& y) {
  return to_ordering(sign_of_two_surds(x.a() - y.a(), x.b(), x.d(), -y.b(), y.d()));
}

std::strong_ordering compare(const QuadraticIrrational& x, const Rational& r) {
  return to_ordering(sign_of_surd(x.a() - r, x.b(), Rational(x.d())));
}

std::string ExtendedValue::to_string() const {
  if (c == 0) return format_rational(q);
  const char* sign = c < 0 ? "-" : "+";
  return format_rational(q) + sign + format_rational(abs(c)) + std::string(kRadical) + std::to_string(d);
}

std::strong_ordering compare(const ExtendedValue& x, const ExtendedValue& y) {
  return to_ordering(sign_of_two_surds(x.q - y.q, x.c, x.d, -y.c, y.d));
}

}  // namespace ordo
