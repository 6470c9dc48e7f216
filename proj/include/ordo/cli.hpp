#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ordo/cones.hpp"
#include "ordo/constructions.hpp"
#include "ordo/io.hpp"

namespace ordo::cli {

/// Parameters shared by every command that builds a field or an order.
/// Values left empty fall back to the config file, then to defaults.
struct FieldOptions {
  std::string construct = "embed";  // embed | iota | alpha | rf | lex | table
  std::string alpha;                // "a+b√d", default "0+1√2"
  std::string phi;                  // "affine:k", default "affine:1"
  std::string superadditivity = "strict";
  std::string table_path;           // OrderTable JSON for construct=table
  Json config = Json::object();     // {"alpha", "phi", "group", "lex": {...}}
};

/// Builds the named field. `window` bounds the eager checks of rf fields.
ConeField make_field(const GroupSpec& group, const FieldOptions& options, const Window& window);

/// Order specs: standard | reversed | alpha:<a+b√d> | rf:affine:k | embed |
/// iota | lex. Fields are turned into orders by order_from_field.
OrderOracle make_order(const GroupSpec& group, const std::string& spec, const FieldOptions& options,
                       const Window& window);

/// Exit codes: 0 success, 1 violations or UNSAT found, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordo::cli
