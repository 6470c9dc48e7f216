#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ordo/cones.hpp"
#include "ordo/diffuse.hpp"
#include "ordo/extend.hpp"
#include "ordo/group.hpp"
#include "ordo/order.hpp"

namespace ordo {

// nlohmann::json keeps object keys sorted, which gives byte-stable dumps.
using Json = nlohmann::json;

Json elements_to_json(const GroupSpec& group, std::span<const Element> elements);
std::vector<Element> elements_from_json(const GroupSpec& group, const Json& j);

/// {"window": [...], "pairs": [[g, h], ...]}
Json to_json(const OrderTable& table);
OrderTable order_table_from_json(const GroupSpec& group, const Json& j);

/// {"window", "c1", "c2", "c3"}
Json to_json(const AxiomReport& report);
/// {"extreme", "subset", "witnesses": [[a, h], ...]}
Json to_json(const ExtremeReport& report, const GroupSpec& group);
/// {"checked", "counterexample": null | {"subset"}, "budget_exhausted"}
Json to_json(const ScanReport& report, const GroupSpec& group);
Json to_json(const ExtensionValidation& validation, const GroupSpec& group);
/// {"radii", "coherent", "tables"}
Json to_json(const TowerReport& report);
/// {"group", "provenance", "description"}
Json to_json(const ConeField& field);

/// "ball:r" or a JSON document: a list of elements, {"elements": [...]} or
/// {"ball": r}.
Window window_from_json(const GroupSpec& group, const Json& j);
Window parse_window(const GroupSpec& group, std::string_view spec);

/// {"group", "window": {"ball": r} | {"elements": [...]}, "R": [...], "total"}
ExtensionProblem problem_from_json(const Json& j);
Json to_json(const ExtensionProblem& problem);

std::string read_file(const std::string& path);
/// Compact dump followed by a newline.
std::string dump(const Json& j);

}  // namespace ordo
