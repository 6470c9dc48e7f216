#include "ordo/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ordo {

Json elements_to_json(const GroupSpec& group, std::span<const Element> elements) {
  Json out = Json::array();
  for (const auto& g : elements) out.push_back(group.encode(g));
  return out;
}

std::vector<Element> elements_from_json(const GroupSpec& group, const Json& j) {
  if (!j.is_array()) throw ParseError("expected a JSON array of elements", 0);
  std::vector<Element> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError("elements must be JSON strings", 0);
    out.push_back(group.decode(item.get<std::string>()));
  }
  return out;
}

namespace {

Json pair_json(const GroupSpec& group, const Element& a, const Element& b) {
  return Json::array({group.encode(a), group.encode(b)});
}

Json triple_json(const GroupSpec& group, const std::tuple<Element, Element, Element>& t) {
  return Json::array({group.encode(std::get<0>(t)), group.encode(std::get<1>(t)), group.encode(std::get<2>(t))});
}

}  // namespace

Json to_json(const OrderTable& table) {
  const auto& group = table.window().group();
  Json pairs = Json::array();
  for (const auto& [g, h] : table.pairs()) pairs.push_back(pair_json(group, g, h));
  return Json{{"window", elements_to_json(group, table.window().elements())}, {"pairs", std::move(pairs)}};
}

OrderTable order_table_from_json(const GroupSpec& group, const Json& j) {
  if (!j.is_object() || !j.contains("window") || !j.contains("pairs"))
    throw ParseError("order table needs \"window\" and \"pairs\"", 0);
  Window window(group, elements_from_json(group, j.at("window")));
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw ParseError("each pair must be [g, h]", 0);
    pairs.emplace_back(group.decode(p[0].get<std::string>()), group.decode(p[1].get<std::string>()));
  }
  return OrderTable(std::move(window), pairs);
}

Json to_json(const AxiomReport& report) {
  const auto& group = report.window.group();
  Json c1 = Json::array(), c2 = Json::array(), c3 = Json::array();
  for (const auto& [f, g] : report.c1) c1.push_back(pair_json(group, f, g));
  for (const auto& t : report.c2) c2.push_back(triple_json(group, t));
  for (const auto& [g, h] : report.c3) c3.push_back(pair_json(group, g, h));
  Json out{{"window", elements_to_json(group, report.window.elements())}, {"c1", c1}, {"c2", c2}};
  out["c3"] = report.checked_total ? c3 : Json(nullptr);
  return out;
}

Json to_json(const ExtremeReport& report, const GroupSpec& group) {
  Json witnesses = Json::array();
  for (const auto& [a, h] : report.witnesses) witnesses.push_back(pair_json(group, a, h));
  return Json{{"subset", elements_to_json(group, report.subset)},
              {"extreme", elements_to_json(group, report.extreme)},
              {"witnesses", std::move(witnesses)}};
}

Json to_json(const ScanReport& report, const GroupSpec& group) {
  Json counterexample = nullptr;
  if (report.counterexample) counterexample = Json{{"subset", elements_to_json(group, *report.counterexample)}};
  return Json{{"checked", report.checked},
              {"counterexample", std::move(counterexample)},
              {"budget_exhausted", report.budget_exhausted}};
}

Json to_json(const ExtensionValidation& v, const GroupSpec& group) {
  Json irreflexivity = elements_to_json(group, v.order.irreflexivity);
  Json asymmetry = Json::array(), transitivity = Json::array(), condition_i = Json::array();
  for (const auto& [g, h] : v.order.asymmetry) asymmetry.push_back(pair_json(group, g, h));
  for (const auto& t : v.order.transitivity) transitivity.push_back(triple_json(group, t));
  for (const auto& t : v.condition_i) condition_i.push_back(triple_json(group, t));
  Json totality = nullptr;
  if (v.totality) totality = pair_json(group, v.totality->first, v.totality->second);
  return Json{{"irreflexivity", std::move(irreflexivity)},
              {"asymmetry", std::move(asymmetry)},
              {"transitivity", std::move(transitivity)},
              {"condition_i", std::move(condition_i)},
              {"condition_ii", elements_to_json(group, v.condition_ii)},
              {"totality", std::move(totality)},
              {"ok", v.ok()}};
}

Json to_json(const TowerReport& report) {
  Json tables = Json::array();
  for (const auto& t : report.tables) tables.push_back(to_json(t));
  return Json{{"radii", report.radii}, {"coherent", report.coherent}, {"tables", std::move(tables)}};
}

Json to_json(const ConeField& field) {
  return Json{{"group", field.group.to_string()},
              {"provenance", to_string(field.provenance)},
              {"description", field.description}};
}

Window window_from_json(const GroupSpec& group, const Json& j) {
  if (j.is_array()) return Window(group, elements_from_json(group, j));
  if (j.is_object() && j.contains("elements")) return Window(group, elements_from_json(group, j.at("elements")));
  if (j.is_object() && j.contains("ball")) {
    const auto& r = j.at("ball");
    if (!r.is_number_integer() || r.get<int>() < 0) throw ParseError("\"ball\" needs a non-negative integer", 0);
    return generate_ball(group, r.get<int>());
  }
  throw ParseError("window must be a list, {\"elements\": [...]} or {\"ball\": r}", 0);
}

Window parse_window(const GroupSpec& group, std::string_view spec) {
  constexpr std::string_view prefix = "ball:";
  if (spec.starts_with(prefix)) {
    int r = -1;
    const auto rest = spec.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), r);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || r < 0)
      throw ParseError("expected 'ball:r' with r >= 0", prefix.size());
    return generate_ball(group, r);
  }
  if (!spec.empty() && (spec.front() == '[' || spec.front() == '{'))
    return window_from_json(group, Json::parse(spec));
  return window_from_json(group, Json::parse(read_file(std::string(spec))));
}

ExtensionProblem problem_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("window"))
    throw ParseError("problem needs \"group\" and \"window\"", 0);
  const GroupSpec group = GroupSpec::parse(j.at("group").get<std::string>());
  Window window = window_from_json(group, j.at("window"));
  std::vector<Element> r;
  if (j.contains("R")) r = elements_from_json(group, j.at("R"));
  const bool total = j.value("total", false);
  return ExtensionProblem{std::move(window), RSet(group, std::move(r)), total};
}

Json to_json(const ExtensionProblem& problem) {
  const auto& group = problem.window.group();
  return Json{{"group", group.to_string()},
              {"window", Json{{"elements", elements_to_json(group, problem.window.elements())}}},
              {"R", elements_to_json(group, problem.r.elements())},
              {"total", problem.require_total}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace ordo
