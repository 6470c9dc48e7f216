#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ordo/cones.hpp"
#include "ordo/group.hpp"
#include "ordo/order.hpp"
#include "ordo/quadratic.hpp"

namespace ordo {

// ---------------------------------------------------------------------------
// Total orders on subgroups of Q from a positive irrational alpha.

/// The rational value of an element of zn:1 or a subgroup of Q.
Rational to_rational(const Element& g);

/// f_alpha(r) = r for r >= 0, -alpha * r for r < 0.
ExtendedValue f_alpha_value(const Rational& r, const QuadraticIrrational& alpha);

/// a < b iff f_alpha(a) < f_alpha(b). Equal arguments are incomparable.
Comparison compare_alpha(const Rational& a, const Rational& b, const QuadraticIrrational& alpha);

/// The order a < b iff f_alpha(a) < f_alpha(b) on zn:1 or a subgroup of Q.
/// Throws std::invalid_argument unless alpha > 0.
OrderOracle alpha_order(const GroupSpec& group, const QuadraticIrrational& alpha);

struct AlphaWitness {
  Rational a;                        // a in (alpha, beta), a in A
  QuadraticIrrational alpha_scaled;  // alpha / a: -a precedes a
  QuadraticIrrational beta_scaled;   // beta / a:  a precedes -a
  bool verified = false;
};

/// Searches the admissible denominators q <= search_bound of A in increasing
/// order for the least n/q strictly between alpha and beta. Returns nullopt
/// when none exists within the bound.
std::optional<AlphaWitness> alpha_distinctness_witness(const QuadraticIrrational& alpha,
                                                       const QuadraticIrrational& beta, const GroupSpec& group,
                                                       std::int64_t search_bound);

// ---------------------------------------------------------------------------
// Cofinal schemes and the functions f_phi.

/// Strictly increasing phi: N>0 -> N>1.
struct PhiFunction {
  std::function<std::int64_t(std::int64_t)> fn;
  std::string spec;

  std::int64_t operator()(std::int64_t n) const { return fn(n); }

  /// phi(n) = n + k, k >= 1.
  static PhiFunction affine(std::int64_t k);
  /// Parses "affine:k".
  static PhiFunction parse(std::string_view text);
};

class CofinalSearchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CofinalScheme {
  GroupSpec group;
  LeftOrderCone cone;  // bi-order cone of the abelian group
  std::function<Element(std::int64_t)> x;
  std::int64_t search_bound = 1'000'000;

  /// x_i = i for zn:1 and subgroups of Q; x_i = i * e_n for zn:n.
  static CofinalScheme standard(const GroupSpec& group);
  /// a <= b in the scheme's bi-order.
  bool less_equal(const Element& a, const Element& b) const;
};

/// Least i >= 1 with a <= x_i.
std::int64_t cofinal_index(const Element& a, const CofinalScheme& scheme);

/// a^(phi(n_a)); requires a positive.
Element f_phi(const Element& a, const CofinalScheme& scheme, const PhiFunction& phi);

enum class Superadditivity { strict, weak };

class SuperadditivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The partial, non-total field
///   P_id = P u P^-1,  P_a = P^-1 for a in P^-1,
///   P_a = P u { b : b < f_phi(a)^-1 } for a in P.
/// Before returning, checks a < f(a) and f(a) f(b) < f(ab) (or <= for
/// Superadditivity::weak) over all positive a, b in `validation_window`.
ConeField rf_field(const CofinalScheme& scheme, const PhiFunction& phi, const Window& validation_window,
                   Superadditivity mode = Superadditivity::strict);

// ---------------------------------------------------------------------------
// Lexicographic extension across a surjection onto an abelian group.

struct LexScheme {
  GroupSpec group;
  GroupSpec quotient;
  std::function<Element(const Element&)> project;         // G -> A
  std::function<bool(const Element&)> in_kernel;           // g in H
  std::function<Element(const Element&)> representative;  // coset rep, rep(id) = id
  OrderOracle kernel_order;                                // on G, queried on H only
  OrderOracle quotient_order;                              // on A
};

class LexSchemeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Klein bottle group onto Z by the x-exponent; kernel <y>, representatives x^n.
LexScheme klein_lex_scheme(OrderOracle quotient_order, OrderOracle kernel_order);
/// Z^n onto Z by the last coordinate; representatives (0, ..., 0, c).
LexScheme lattice_lex_scheme(int rank, OrderOracle quotient_order, OrderOracle kernel_order);

Comparison lex_compare(const Element& g1, const Element& g2, const LexScheme& scheme);
OrderOracle lex_order(LexScheme scheme);

}  // namespace ordo
