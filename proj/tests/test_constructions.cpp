#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "ordo/constructions.hpp"

using namespace ordo;
using Decimal = boost::multiprecision::cpp_dec_float_100;

namespace {

const GroupSpec Z = GroupSpec::integer_lattice(1);
const GroupSpec Q2 = GroupSpec::rational_subgroup({2});
const QuadraticIrrational SQRT2(0, 1, 2);
const QuadraticIrrational SQRT3(0, 1, 3);

Element z(std::int64_t n) { return Z.lattice({n}); }

Decimal approx(const QuadraticIrrational& x) {
  return Decimal(x.a()) + Decimal(x.b()) * boost::multiprecision::sqrt(Decimal(x.d()));
}

// f_alpha evaluated numerically, as an independent check of compare_alpha.
Decimal f_numeric(const Rational& r, const QuadraticIrrational& alpha) {
  return r >= 0 ? Decimal(r) : -approx(alpha) * Decimal(r);
}

OrderOracle std_order(const GroupSpec& g) { return order_from_positive(g, standard_cone(g).positive, "std"); }

}  // namespace

TEST(Alpha, FValues) {
  EXPECT_EQ(f_alpha_value(Rational(3, 2), SQRT2), (ExtendedValue{Rational(3, 2), 0, 2}));
  EXPECT_EQ(f_alpha_value(Rational(-2), SQRT2), (ExtendedValue{0, 2, 2}));
  EXPECT_EQ(f_alpha_value(Rational(0), SQRT2), (ExtendedValue{0, 0, 2}));
}

TEST(Alpha, CompareExamples) {
  EXPECT_EQ(compare_alpha(-2, 3, SQRT2), Comparison::less);
  EXPECT_EQ(compare_alpha(1, -1, SQRT2), Comparison::less);
  EXPECT_EQ(compare_alpha(Rational(5, 2), Rational(5, 2), SQRT2), Comparison::incomparable);
}

TEST(Alpha, CompareAgreesWithNumericEvaluation) {
  const auto w = generate_ball(Q2, 4);
  for (const auto& alpha : {SQRT2, SQRT3, QuadraticIrrational(Rational(1, 3), Rational(1, 7), 5)}) {
    for (const auto& g : w)
      for (const auto& h : w) {
        const auto a = to_rational(g), b = to_rational(h);
        const auto c = compare_alpha(a, b, alpha);
        const auto fa = f_numeric(a, alpha), fb = f_numeric(b, alpha);
        EXPECT_EQ(c, fa < fb ? Comparison::less : (fa > fb ? Comparison::greater : Comparison::incomparable));
      }
  }
}

TEST(Alpha, OrdersAreTotalAndLocallyInvariant) {
  for (const auto& G : {Z, Q2, GroupSpec::rational_subgroup({2, 3})}) {
    const auto w = generate_ball(G, 3);
    const auto o = alpha_order(G, SQRT2);
    EXPECT_TRUE(check_li_condition(o, w).empty()) << G.to_string();
    const auto t = tabulate(o, w);
    EXPECT_TRUE(validate_strict_partial_order(t).ok());
    EXPECT_TRUE(is_total(t).total);
  }
  EXPECT_THROW(alpha_order(GroupSpec::klein(), SQRT2), GroupError);
  EXPECT_THROW(alpha_order(Z, QuadraticIrrational(0, -1, 2)), std::invalid_argument);
}

TEST(Alpha, WitnessExamples) {
  const auto w = alpha_distinctness_witness(SQRT2, SQRT3, Q2, 1024);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->a, Rational(3, 2));
  EXPECT_TRUE(w->verified);
  EXPECT_EQ(w->alpha_scaled, QuadraticIrrational(0, Rational(2, 3), 2));
  EXPECT_EQ(w->beta_scaled, QuadraticIrrational(0, Rational(2, 3), 3));
  EXPECT_EQ(compare_alpha(Rational(-3, 2), Rational(3, 2), w->alpha_scaled), Comparison::less);
  EXPECT_EQ(compare_alpha(Rational(3, 2), Rational(-3, 2), w->beta_scaled), Comparison::less);

  const auto w2 = alpha_distinctness_witness(SQRT2, QuadraticIrrational(0, 2, 2), Z, 10);
  ASSERT_TRUE(w2);
  EXPECT_EQ(w2->a, Rational(2));
  EXPECT_FALSE(alpha_distinctness_witness(SQRT2, QuadraticIrrational(0, Rational(101, 100), 2), Z, 10));
  EXPECT_THROW(alpha_distinctness_witness(SQRT3, SQRT2, Z, 10), std::invalid_argument);
}

TEST(Alpha, WitnessIsLeastDyadicInInterval) {
  // Brute force: smallest denominator 2^k, then smallest numerator, strictly inside.
  for (int k = 0; k < 30; ++k) {
    const auto alpha = SQRT2.scaled(Rational(100 + k, 100));
    const auto beta = SQRT2.scaled(Rational(101 + k, 100));
    const auto w = alpha_distinctness_witness(alpha, beta, Q2, 1 << 12);
    ASSERT_TRUE(w);
    std::optional<Rational> expected;
    for (std::int64_t q = 1; q <= (1 << 12) && !expected; q *= 2)
      for (std::int64_t n = 1; n <= 4 * q && !expected; ++n) {
        const Decimal v = Decimal(n) / Decimal(q);
        if (v > approx(alpha) && v < approx(beta)) expected = Rational(n, q);
      }
    ASSERT_TRUE(expected);
    EXPECT_EQ(w->a, *expected);
    EXPECT_TRUE(w->verified);
  }
}

TEST(Cofinal, IndexExamples) {
  const auto s = CofinalScheme::standard(Z);
  EXPECT_EQ(cofinal_index(z(5), s), 5);
  EXPECT_EQ(cofinal_index(z(-3), s), 1);
  EXPECT_EQ(cofinal_index(Q2.rational(5, 2), CofinalScheme::standard(Q2)), 3);
  auto slow = s;
  slow.search_bound = 3;
  EXPECT_THROW(cofinal_index(z(10), slow), CofinalSearchError);
}

TEST(Cofinal, FPhiExamples) {
  const auto phi = PhiFunction::affine(1);
  const auto s = CofinalScheme::standard(Z);
  EXPECT_EQ(f_phi(z(5), s, phi), z(30));
  EXPECT_EQ(f_phi(z(1), s, phi), z(2));
  EXPECT_EQ(f_phi(Q2.rational(5, 2), CofinalScheme::standard(Q2), phi), Q2.rational(10));
  EXPECT_THROW(f_phi(z(-1), s, phi), std::invalid_argument);
  EXPECT_EQ(PhiFunction::parse("affine:3")(4), 7);
  EXPECT_THROW(PhiFunction::parse("affine:0"), std::invalid_argument);
  EXPECT_THROW(PhiFunction::parse("square"), std::invalid_argument);
}

TEST(Cofinal, FPhiPropertiesOnZ) {
  const auto s = CofinalScheme::standard(Z);
  for (int k = 1; k <= 5; ++k) {
    const auto phi = PhiFunction::affine(k);
    for (int a = 1; a <= 20; ++a) {
      const auto fa = f_phi(z(a), s, phi).lattice()[0];
      EXPECT_EQ(fa, a * (a + k));
      EXPECT_GT(fa, a);
      for (int b = 1; b <= 20; ++b) EXPECT_LT(fa + f_phi(z(b), s, phi).lattice()[0], f_phi(z(a + b), s, phi).lattice()[0]);
    }
  }
}

TEST(Rf, MembershipExamples) {
  const auto F = rf_field(CofinalScheme::standard(Z), PhiFunction::affine(1), generate_ball(Z, 3));
  EXPECT_TRUE(F.member(z(2), z(-7)));
  EXPECT_FALSE(F.member(z(2), z(-6)));
  EXPECT_TRUE(F.member(z(-3), z(-1)));
  EXPECT_TRUE(F.member(z(0), z(5)));
  EXPECT_FALSE(F.member(z(0), z(0)));
  EXPECT_EQ(F.provenance, Provenance::rf);
}

TEST(Rf, StrictSuperadditivityDependsOnTheGroup) {
  const auto phi = PhiFunction::affine(1);
  // 1/2 + 1/2: f(1/2) = 1 twice, f(1) = 2, so only the weak form holds.
  EXPECT_THROW(rf_field(CofinalScheme::standard(Q2), phi, generate_ball(Q2, 2)), SuperadditivityError);
  EXPECT_NO_THROW(rf_field(CofinalScheme::standard(Q2), phi, generate_ball(Q2, 3), Superadditivity::weak));
  const auto Z2 = GroupSpec::integer_lattice(2);
  EXPECT_THROW(rf_field(CofinalScheme::standard(Z2), phi, generate_ball(Z2, 2)), SuperadditivityError);
  EXPECT_NO_THROW(rf_field(CofinalScheme::standard(Z2), phi, generate_ball(Z2, 3), Superadditivity::weak));
}

TEST(Rf, PartialFieldsAcrossGroups) {
  const auto phi = PhiFunction::affine(1);
  for (const auto& G : {Z, Q2, GroupSpec::integer_lattice(2)}) {
    const auto w = generate_ball(G, 3);
    const auto mode = G == Z ? Superadditivity::strict : Superadditivity::weak;
    const auto F = rf_field(CofinalScheme::standard(G), phi, w, mode);
    const auto r = cone_axiom_report(F, w, true);
    EXPECT_TRUE(r.partial_ok()) << G.to_string();
    EXPECT_FALSE(r.c3.empty()) << G.to_string();
  }
}

TEST(Rf, DistinctPhiGiveDistinctFields) {
  const auto s = CofinalScheme::standard(Z);
  const auto w = generate_ball(Z, 2);
  for (int k = 1; k <= 10; ++k)
    for (int k2 = k + 1; k2 <= 10; ++k2) {
      const auto F = rf_field(s, PhiFunction::affine(k), w);
      const auto G = rf_field(s, PhiFunction::affine(k2), w);
      EXPECT_TRUE(F.member(z(1), z(-(k2 + 1))));
      EXPECT_FALSE(G.member(z(1), z(-(k2 + 1))));
    }
}

TEST(Lex, KleinExamples) {
  const auto K = GroupSpec::klein();
  const auto kernel = std_order(K);
  const auto lex = lex_order(klein_lex_scheme(alpha_order(Z, SQRT2), kernel));
  EXPECT_EQ(lex.compare(K.klein_element(1, 2), K.klein_element(3, 2)), Comparison::less);
  EXPECT_EQ(lex.compare(K.klein_element(0, 1), K.klein_element(0, -1)), Comparison::less);

  const auto rf = order_from_field(rf_field(CofinalScheme::standard(Z), PhiFunction::affine(1), generate_ball(Z, 4)));
  EXPECT_EQ(rf.compare(z(1), z(-1)), Comparison::incomparable);
  const auto partial = lex_order(klein_lex_scheme(rf, kernel));
  EXPECT_EQ(partial.compare(K.klein_element(0, 1), K.klein_element(0, -1)), Comparison::incomparable);
}

TEST(Lex, OrdersAreLocallyInvariant) {
  const auto K = GroupSpec::klein();
  const auto Z2 = GroupSpec::integer_lattice(2);
  const auto rf = order_from_field(rf_field(CofinalScheme::standard(Z), PhiFunction::affine(1), generate_ball(Z, 4)));
  const std::vector<std::pair<OrderOracle, bool>> cases{
      {lex_order(klein_lex_scheme(alpha_order(Z, SQRT2), std_order(K))), true},
      {lex_order(klein_lex_scheme(rf, std_order(K))), false},
      {lex_order(lattice_lex_scheme(2, alpha_order(Z, SQRT2), std_order(Z2))), true},
      {lex_order(lattice_lex_scheme(2, rf, std_order(Z2))), false},
  };
  for (const auto& [o, total] : cases) {
    const auto w = generate_ball(o.group, 3);
    EXPECT_TRUE(check_li_condition(o, w).empty()) << o.name;
    const auto t = tabulate(o, w);
    EXPECT_TRUE(validate_strict_partial_order(t).ok()) << o.name;
    EXPECT_EQ(is_total(t).total, total) << o.name;
    // Restricted to the kernel it is the kernel order.
    for (const auto& g : w)
      for (const auto& h : w) {
        const bool in_kernel = o.group.kind() == GroupKind::klein ? g.klein().b == 0 && h.klein().b == 0
                                                                  : g.lattice()[1] == 0 && h.lattice()[1] == 0;
        if (in_kernel) EXPECT_EQ(o.compare(g, h), std_order(o.group).compare(g, h));
      }
  }
}

TEST(Lex, RejectsBadRepresentatives) {
  auto scheme = klein_lex_scheme(alpha_order(Z, SQRT2), std_order(GroupSpec::klein()));
  scheme.representative = [](const Element& e) { return GroupSpec::klein().klein_element(1, e.klein().b); };
  EXPECT_THROW(lex_order(scheme), LexSchemeError);
}
