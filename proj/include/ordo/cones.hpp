#pragma once

#include <functional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ordo/group.hpp"
#include "ordo/order.hpp"

namespace ordo {

/// Positive cone of a left-ordering: P.P in P, P and P^-1 disjoint, and
/// P u P^-1 = G \ {id}.
struct LeftOrderCone {
  GroupSpec group;
  std::function<bool(const Element&)> positive;
  std::string name;

  bool negative(const Element& g) const { return positive(group.invert(g)); }
};

/// The default left order of each group kind:
///   integer lattice:   last nonzero coordinate positive
///   subgroup of Q:     r > 0
///   klein:             b > 0, or b = 0 and a > 0 (for y^a x^b)
///   free:              Magnus expansion, first nonzero coefficient positive
LeftOrderCone standard_cone(const GroupSpec& group);
LeftOrderCone reversed(LeftOrderCone cone);
/// h^-1 P h
LeftOrderCone conjugated_cone(LeftOrderCone cone, const Element& h);

/// Sign of the first nonzero non-constant coefficient of the Magnus
/// expansion a_i -> 1 + X_i, ordering monomials by degree and then
/// lexicographically. Bi-invariant order on the free group.
bool magnus_positive(const Word& word, int rank);

struct ConeViolations {
  std::vector<std::pair<Element, Element>> semigroup;  // p, q positive but p q not
  std::vector<Element> disjointness;                   // g and g^-1 both positive
  std::vector<Element> totality;                       // neither g nor g^-1 positive
  bool ok() const { return semigroup.empty() && disjointness.empty() && totality.empty(); }
};

ConeViolations check_left_order_cone(const LeftOrderCone& cone, const Window& window);

enum class Provenance { embedded_left_order, iota, alpha, rf, lex, finite_table, acted_on, from_order };

const char* to_string(Provenance p);

/// An equivariant field of cones (P_f), given as the oracle
/// member(f, g) = "g in P_f".
struct ConeField {
  GroupSpec group;
  std::function<bool(const Element&, const Element&)> member;
  Provenance provenance = Provenance::from_order;
  std::string description;
};

/// Raised by table-backed fields when queried outside their window.
class OutOfDomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct AxiomReport {
  Window window;
  bool checked_total = false;
  std::vector<std::pair<Element, Element>> c1;
  std::vector<std::tuple<Element, Element, Element>> c2;
  std::vector<std::pair<Element, Element>> c3;

  bool partial_ok() const { return c1.empty() && c2.empty(); }
  bool ok() const { return partial_ok() && (!checked_total || c3.empty()); }
};

/// Exhaustive check over the window of
///   (1) g in P_f or g^-1 in P_f for g != id, and id never in P_f;
///   (2) g in P_f and h in P_{gf} imply hg in P_f;
///   (3) (optional) g h^-1 in P_h or h g^-1 in P_g for g != h.
/// Condition (3) witnesses are unordered: each pair is listed once with g
/// before h canonically.
AxiomReport cone_axiom_report(const ConeField& field, const Window& window, bool check_total);

/// f < g iff g f^-1 in P_f.
OrderOracle order_from_field(ConeField field);
/// P_f = { g : f < g f }.
ConeField field_from_order(OrderOracle order, Provenance provenance = Provenance::from_order);

/// i(P): the constant field P_f = P.
ConeField embed_left_order(LeftOrderCone cone);
/// iota(P): P_id = P u P^-1, P_f = P^-1 for f in P^-1, P_f = P for f in P.
ConeField iota(LeftOrderCone cone);

/// (g, h) . (P_f) = (h^-1 P_{h f g^-1} h).
ConeField act(const Element& g, const Element& h, ConeField field);

/// Whether the field lies in the subbasic set W_(g,h), i.e. h in P_g.
bool subbasic_member(const ConeField& field, const Element& g, const Element& h);

/// Wraps a strict partial order table as a field; throws OutOfDomainError
/// beyond the window.
ConeField finite_table_field(OrderTable table);

}  // namespace ordo
