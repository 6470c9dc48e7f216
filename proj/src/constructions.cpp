#include "ordo/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <memory>

namespace ordo {

Rational to_rational(const Element& g) {
  switch (g.kind()) {
    case GroupKind::rational_subgroup:
      return Rational(g.fraction().num, g.fraction().den);
    case GroupKind::integer_lattice:
      if (g.lattice().size() == 1) return Rational(g.lattice()[0]);
      break;
    default:
      break;
  }
  throw GroupError("element is not a rational number");
}

ExtendedValue f_alpha_value(const Rational& r, const QuadraticIrrational& alpha) {
  if (r >= 0) return ExtendedValue{r, 0, alpha.d()};
  return ExtendedValue{-alpha.a() * r, -alpha.b() * r, alpha.d()};
}

Comparison compare_alpha(const Rational& a, const Rational& b, const QuadraticIrrational& alpha) {
  if (a == b) return Comparison::incomparable;
  const auto c = compare(f_alpha_value(a, alpha), f_alpha_value(b, alpha));
  // f_alpha is injective for irrational alpha, so c is never equal here.
  return c < 0 ? Comparison::less : Comparison::greater;
}

OrderOracle alpha_order(const GroupSpec& group, const QuadraticIrrational& alpha) {
  const bool rational_like = group.kind() == GroupKind::rational_subgroup ||
                             (group.kind() == GroupKind::integer_lattice && group.rank() == 1);
  if (!rational_like) throw GroupError("alpha orders need zn:1 or a subgroup of Q, got " + group.to_string());
  if (alpha.sign() <= 0) throw std::invalid_argument("alpha must be positive");
  auto compare = [alpha](const Element& g, const Element& h) {
    return compare_alpha(to_rational(g), to_rational(h), alpha);
  };
  return OrderOracle{group, std::move(compare), "alpha(" + alpha.to_string() + ")"};
}

namespace {

std::vector<std::int64_t> admissible_denominators(const GroupSpec& group, std::int64_t bound) {
  std::vector<std::int64_t> out{1};
  if (group.kind() == GroupKind::rational_subgroup) {
    for (std::size_t i = 0; i < out.size(); ++i)
      for (auto p : group.primes())
        if (out[i] <= bound / p) {
          const auto q = out[i] * p;
          if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
        }
  }
  std::sort(out.begin(), out.end());
  std::erase_if(out, [bound](auto q) { return q > bound; });
  return out;
}

}  // namespace

std::optional<AlphaWitness> alpha_distinctness_witness(const QuadraticIrrational& alpha,
                                                       const QuadraticIrrational& beta, const GroupSpec& group,
                                                       std::int64_t search_bound) {
  if (alpha.sign() <= 0 || compare(alpha, beta) >= 0)
    throw std::invalid_argument("need 0 < alpha < beta");
  for (auto q : admissible_denominators(group, search_bound)) {
    const auto n = alpha.scaled(Rational(q)).floor() + 1;
    const Rational a(n, q);
    if (compare(beta, a) <= 0) continue;
    AlphaWitness w{a, alpha.divided(a), beta.divided(a), false};
    w.verified = compare_alpha(-a, a, w.alpha_scaled) == Comparison::less &&
                 compare_alpha(a, -a, w.beta_scaled) == Comparison::less;
    return w;
  }
  return std::nullopt;
}

PhiFunction PhiFunction::affine(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("affine phi needs k >= 1");
  return PhiFunction{[k](std::int64_t n) { return n + k; }, "affine:" + std::to_string(k)};
}

PhiFunction PhiFunction::parse(std::string_view text) {
  constexpr std::string_view prefix = "affine:";
  if (!text.starts_with(prefix)) throw ParseError("expected 'affine:k'", 0);
  std::int64_t k = 0;
  const auto rest = text.substr(prefix.size());
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
  if (ec != std::errc() || ptr != rest.data() + rest.size())
    throw ParseError("expected integer after 'affine:'", prefix.size());
  if (k < 1) throw ParseError("affine:k needs k >= 1", prefix.size());
  return affine(k);
}

CofinalScheme CofinalScheme::standard(const GroupSpec& group) {
  switch (group.kind()) {
    case GroupKind::rational_subgroup:
      return {group, standard_cone(group), [group](std::int64_t i) { return group.rational(i); }};
    case GroupKind::integer_lattice: {
      const int rank = group.rank();
      return {group, standard_cone(group), [group, rank](std::int64_t i) {
                std::vector<std::int64_t> v(static_cast<std::size_t>(rank), 0);
                v.back() = i;
                return group.lattice(std::move(v));
              }};
    }
    default:
      throw GroupError("cofinal schemes need an abelian group, got " + group.to_string());
  }
}

bool CofinalScheme::less_equal(const Element& a, const Element& b) const {
  return a == b || cone.positive(group.compose(b, group.invert(a)));
}

std::int64_t cofinal_index(const Element& a, const CofinalScheme& scheme) {
  for (std::int64_t i = 1; i <= scheme.search_bound; ++i)
    if (scheme.less_equal(a, scheme.x(i))) return i;
  throw CofinalSearchError("no x_i above " + scheme.group.encode(a) + " within " +
                           std::to_string(scheme.search_bound) + " steps");
}

Element f_phi(const Element& a, const CofinalScheme& scheme, const PhiFunction& phi) {
  if (!scheme.cone.positive(a)) throw std::invalid_argument("f_phi needs a positive element, got " + scheme.group.encode(a));
  return scheme.group.power(a, phi(cofinal_index(a, scheme)));
}

ConeField rf_field(const CofinalScheme& scheme, const PhiFunction& phi, const Window& validation_window,
                   Superadditivity mode) {
  const auto& group = scheme.group;
  if (!group.is_abelian()) throw GroupError("rf fields need an abelian group");
  const auto& cone = scheme.cone;

  std::vector<Element> positives;
  for (const auto& a : validation_window)
    if (cone.positive(a)) positives.push_back(a);
  for (const auto& a : positives) {
    const Element fa = f_phi(a, scheme, phi);
    if (!cone.positive(group.compose(fa, group.invert(a))))
      throw SuperadditivityError("f(a) does not exceed a at a = " + group.encode(a));
    for (const auto& b : positives) {
      const Element lhs = group.compose(fa, f_phi(b, scheme, phi));
      const Element rhs = f_phi(group.compose(a, b), scheme, phi);
      const bool strict = cone.positive(group.compose(rhs, group.invert(lhs)));
      if (!strict && !(mode == Superadditivity::weak && lhs == rhs))
        throw SuperadditivityError(std::string(mode == Superadditivity::strict ? "strict" : "weak") +
                                   " superadditivity fails at a = " + group.encode(a) + ", b = " + group.encode(b));
    }
  }

  auto shared = std::make_shared<const CofinalScheme>(scheme);
  auto member = [shared, phi](const Element& a, const Element& b) {
    const auto& s = *shared;
    if (s.group.is_identity(a)) return !s.group.is_identity(b);
    if (!s.cone.positive(a)) return s.cone.negative(b);
    if (s.cone.positive(b)) return true;
    // b < f(a)^-1  iff  f(a)^-1 b^-1 is positive
    const Element fa = f_phi(a, s, phi);
    return s.cone.positive(s.group.invert(s.group.compose(fa, b)));
  };
  return ConeField{group, std::move(member), Provenance::rf, "rf(" + cone.name + ", " + phi.spec + ")"};
}

LexScheme klein_lex_scheme(OrderOracle quotient_order, OrderOracle kernel_order) {
  const GroupSpec g = GroupSpec::klein();
  const GroupSpec a = GroupSpec::integer_lattice(1);
  return LexScheme{
      g,
      a,
      [a](const Element& e) { return a.lattice({e.klein().b}); },
      [](const Element& e) { return e.klein().b == 0; },
      [g](const Element& e) { return g.klein_element(0, e.klein().b); },
      std::move(kernel_order),
      std::move(quotient_order),
  };
}

LexScheme lattice_lex_scheme(int rank, OrderOracle quotient_order, OrderOracle kernel_order) {
  if (rank < 2) throw GroupError("lattice lex scheme needs rank >= 2");
  const GroupSpec g = GroupSpec::integer_lattice(rank);
  const GroupSpec a = GroupSpec::integer_lattice(1);
  return LexScheme{
      g,
      a,
      [a](const Element& e) { return a.lattice({e.lattice().back()}); },
      [](const Element& e) { return e.lattice().back() == 0; },
      [g, rank](const Element& e) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(rank), 0);
        v.back() = e.lattice().back();
        return g.lattice(std::move(v));
      },
      std::move(kernel_order),
      std::move(quotient_order),
  };
}

Comparison lex_compare(const Element& g1, const Element& g2, const LexScheme& scheme) {
  const auto& group = scheme.group;
  if (!scheme.in_kernel(group.compose(group.invert(g1), g2)))
    return scheme.quotient_order.compare(scheme.project(g1), scheme.project(g2));
  const Element s = scheme.representative(g1);
  const Element s_inv = group.invert(s);
  const Element k1 = group.compose(s_inv, g1);
  const Element k2 = group.compose(s_inv, g2);
  if (!scheme.in_kernel(k1))
    throw LexSchemeError("representative of " + group.encode(g1) + " is not in its coset");
  return scheme.kernel_order.compare(k1, k2);
}

OrderOracle lex_order(LexScheme scheme) {
  if (!(scheme.representative(scheme.group.identity()) == scheme.group.identity()))
    throw LexSchemeError("coset representative of the identity must be the identity");
  auto shared = std::make_shared<const LexScheme>(std::move(scheme));
  std::string name = "lex(" + shared->quotient_order.name + ", " + shared->kernel_order.name + ")";
  auto compare = [shared](const Element& g1, const Element& g2) { return lex_compare(g1, g2, *shared); };
  return OrderOracle{shared->group, std::move(compare), std::move(name)};
}

}  // namespace ordo
