#include "ordo/cones.hpp"

#include <memory>

namespace ordo {

namespace {

bool lattice_positive(const LatticeVec& v) {
  for (auto it = v.rbegin(); it != v.rend(); ++it)
    if (*it != 0) return *it > 0;
  return false;
}

}  // namespace

bool magnus_positive(const Word& word, int rank) {
  if (word.empty()) return false;

  std::vector<std::int64_t> sums(static_cast<std::size_t>(rank), 0);
  for (auto l : word) sums[static_cast<std::size_t>(std::abs(l) - 1)] += l > 0 ? 1 : -1;
  for (auto s : sums)
    if (s != 0) return s > 0;

  // Exponent sums vanish; expand to increasing degree until some homogeneous
  // component is nonzero. series[d] is indexed by the base-`rank` digits of
  // the monomial, first letter most significant.
  const auto r = static_cast<std::size_t>(rank);
  for (std::size_t degree = 2; degree <= word.size(); ++degree) {
    std::vector<std::vector<std::int64_t>> series(degree + 1);
    std::size_t width = 1;
    for (std::size_t d = 0; d <= degree; ++d, width *= r) series[d].assign(width, 0);
    series[0][0] = 1;

    for (auto l : word) {
      const auto gen = static_cast<std::size_t>(std::abs(l) - 1);
      const bool inverse = l < 0;
      std::vector<std::vector<std::int64_t>> next(degree + 1);
      for (std::size_t d = 0; d <= degree; ++d) next[d].assign(series[d].size(), 0);
      for (std::size_t d = 0; d <= degree; ++d) {
        std::size_t shift = 1;  // rank^j
        std::size_t suffix = 0;  // gen repeated j times, as digits
        for (std::size_t j = 0; d + j <= degree; ++j) {
          std::int64_t c = j == 0 ? 1 : (inverse ? (j % 2 ? -1 : 1) : (j == 1 ? 1 : 0));
          if (c != 0)
            for (std::size_t idx = 0; idx < series[d].size(); ++idx)
              if (series[d][idx] != 0) next[d + j][idx * shift + suffix] += c * series[d][idx];
          suffix = suffix * r + gen;
          shift *= r;
          if (!inverse && j >= 1) break;
        }
      }
      series = std::move(next);
    }
    for (auto c : series[degree])
      if (c != 0) return c > 0;
  }
  throw std::logic_error("Magnus expansion of a nontrivial word vanished");
}

LeftOrderCone standard_cone(const GroupSpec& group) {
  switch (group.kind()) {
    case GroupKind::integer_lattice:
      return {group, [](const Element& g) { return lattice_positive(g.lattice()); }, "lex-last"};
    case GroupKind::rational_subgroup:
      return {group, [](const Element& g) { return g.fraction().num > 0; }, "standard"};
    case GroupKind::klein:
      return {group,
              [](const Element& g) {
                const auto& k = g.klein();
                return k.b > 0 || (k.b == 0 && k.a > 0);
              },
              "lex"};
    case GroupKind::free: {
      const int rank = group.rank();
      return {group, [rank](const Element& g) { return magnus_positive(g.word(), rank); }, "magnus"};
    }
  }
  throw GroupError("no standard cone");
}

LeftOrderCone reversed(LeftOrderCone cone) {
  auto group = cone.group;
  auto positive = [group, p = std::move(cone.positive)](const Element& g) { return p(group.invert(g)); };
  return {std::move(group), std::move(positive), "reversed(" + cone.name + ")"};
}

LeftOrderCone conjugated_cone(LeftOrderCone cone, const Element& h) {
  auto group = cone.group;
  auto positive = [group, h, p = std::move(cone.positive)](const Element& x) { return p(group.conjugate(h, x)); };
  return {std::move(group), std::move(positive), "conjugated(" + cone.name + ")"};
}

ConeViolations check_left_order_cone(const LeftOrderCone& cone, const Window& window) {
  const auto& group = window.group();
  ConeViolations out;
  for (const auto& g : window) {
    const bool pos = cone.positive(g);
    const bool neg = cone.negative(g);
    if (group.is_identity(g)) {
      if (pos) out.disjointness.push_back(g);
      continue;
    }
    if (pos && neg) out.disjointness.push_back(g);
    if (!pos && !neg) out.totality.push_back(g);
    if (!pos) continue;
    for (const auto& h : window)
      if (cone.positive(h) && !cone.positive(group.compose(g, h))) out.semigroup.emplace_back(g, h);
  }
  return out;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::embedded_left_order:
      return "embedded-left-order";
    case Provenance::iota:
      return "iota";
    case Provenance::alpha:
      return "alpha";
    case Provenance::rf:
      return "rf";
    case Provenance::lex:
      return "lex";
    case Provenance::finite_table:
      return "finite-table";
    case Provenance::acted_on:
      return "acted-on";
    case Provenance::from_order:
      return "from-order";
  }
  return "";
}

AxiomReport cone_axiom_report(const ConeField& field, const Window& window, bool check_total) {
  const auto& group = window.group();
  const std::size_t n = window.size();
  AxiomReport report{window, check_total, {}, {}, {}};

  std::vector<unsigned char> in_window(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) in_window[i * n + j] = field.member(window[i], window[j]) ? 1 : 0;

  std::vector<Element> inverses;
  inverses.reserve(n);
  for (const auto& g : window) inverses.push_back(group.invert(g));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& g = window[j];
      if (group.is_identity(g)) {
        if (in_window[i * n + j]) report.c1.emplace_back(window[i], g);
      } else if (!in_window[i * n + j] && !in_window[i * n + *window.index_of(inverses[j])]) {
        report.c1.emplace_back(window[i], g);
      }
    }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = window[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (!in_window[i * n + j]) continue;
      const auto& g = window[j];
      const Element gf = group.compose(g, f);
      const auto gf_index = window.index_of(gf);
      for (std::size_t k = 0; k < n; ++k) {
        const auto& h = window[k];
        const bool h_in = gf_index ? in_window[*gf_index * n + k] != 0 : field.member(gf, h);
        if (!h_in) continue;
        const Element hg = group.compose(h, g);
        const auto hg_index = window.index_of(hg);
        const bool closed = hg_index ? in_window[i * n + *hg_index] != 0 : field.member(f, hg);
        if (!closed) report.c2.emplace_back(f, g, h);
      }
    }
  }

  if (check_total) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto& g = window[i];
        const auto& h = window[j];
        const bool ok = field.member(h, group.compose(g, inverses[j])) || field.member(g, group.compose(h, inverses[i]));
        if (!ok) report.c3.emplace_back(g, h);
      }
  }
  return report;
}

OrderOracle order_from_field(ConeField field) {
  GroupSpec group = field.group;
  std::string name = "order(" + field.description + ")";
  auto compare = [group, member = std::move(field.member)](const Element& f, const Element& g) {
    if (f == g) return Comparison::incomparable;
    const bool below = member(f, group.compose(g, group.invert(f)));
    const bool above = member(g, group.compose(f, group.invert(g)));
    if (below && above)
      throw std::logic_error("field is not asymmetric at " + group.encode(f) + ", " + group.encode(g));
    if (below) return Comparison::less;
    if (above) return Comparison::greater;
    return Comparison::incomparable;
  };
  return OrderOracle{std::move(group), std::move(compare), std::move(name)};
}

ConeField field_from_order(OrderOracle order, Provenance provenance) {
  GroupSpec group = order.group;
  std::string description = order.name;
  auto member = [group, compare = std::move(order.compare)](const Element& f, const Element& g) {
    return compare(f, group.compose(g, f)) == Comparison::less;
  };
  return ConeField{std::move(group), std::move(member), provenance, std::move(description)};
}

ConeField embed_left_order(LeftOrderCone cone) {
  std::string description = "i(" + cone.name + ")";
  auto member = [positive = std::move(cone.positive)](const Element&, const Element& g) { return positive(g); };
  return ConeField{std::move(cone.group), std::move(member), Provenance::embedded_left_order, std::move(description)};
}

ConeField iota(LeftOrderCone cone) {
  std::string description = "iota(" + cone.name + ")";
  GroupSpec group = cone.group;
  auto member = [group, positive = std::move(cone.positive)](const Element& f, const Element& g) {
    if (group.is_identity(f)) return !group.is_identity(g);
    if (positive(f)) return positive(g);
    return positive(group.invert(g));
  };
  return ConeField{std::move(group), std::move(member), Provenance::iota, std::move(description)};
}

ConeField act(const Element& g, const Element& h, ConeField field) {
  GroupSpec group = field.group;
  if (!group.contains(g) || !group.contains(h)) throw GroupError("acting elements outside the field's group");
  std::string description = "(" + group.encode(g) + ", " + group.encode(h) + ").(" + field.description + ")";
  const Element g_inv = group.invert(g);
  const Element h_inv = group.invert(h);
  auto member = [group, h, g_inv, h_inv, inner = std::move(field.member)](const Element& f, const Element& x) {
    return inner(group.compose(group.compose(h, f), g_inv), group.compose(group.compose(h, x), h_inv));
  };
  return ConeField{std::move(group), std::move(member), Provenance::acted_on, std::move(description)};
}

bool subbasic_member(const ConeField& field, const Element& g, const Element& h) { return field.member(g, h); }

ConeField finite_table_field(OrderTable table) {
  auto shared = std::make_shared<const OrderTable>(std::move(table));
  GroupSpec group = shared->window().group();
  auto member = [group, shared](const Element& f, const Element& g) {
    const Element gf = group.compose(g, f);
    const auto i = shared->window().index_of(f);
    const auto j = shared->window().index_of(gf);
    if (!i || !j)
      throw OutOfDomainError("table field queried outside its window at (" + group.encode(f) + ", " +
                             group.encode(g) + ")");
    return shared->less(*i, *j);
  };
  return ConeField{std::move(group), std::move(member), Provenance::finite_table, "table"};
}

}  // namespace ordo
