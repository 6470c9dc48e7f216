#include "ordo/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "ordo/diffuse.hpp"
#include "ordo/extend.hpp"

namespace ordo::cli {

namespace {

constexpr const char* kDefaultAlpha = "0+1√2";
constexpr const char* kDefaultPhi = "affine:1";

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string config_string(const Json& config, const char* key, const std::string& flag, const char* fallback) {
  if (!flag.empty()) return flag;
  if (config.is_object() && config.contains(key)) return config.at(key).get<std::string>();
  return fallback;
}

Superadditivity superadditivity_mode(const std::string& text) {
  if (text == "strict") return Superadditivity::strict;
  if (text == "weak") return Superadditivity::weak;
  throw UsageError("--superadditivity must be strict or weak");
}

std::string lex_order_spec(const Json& config, const char* part, const std::string& fallback) {
  if (!config.is_object() || !config.contains("lex")) return fallback;
  const auto& lex = config.at("lex");
  if (!lex.contains(part)) return fallback;
  return lex.at(part).value("order", fallback);
}

ConeField make_lex_field(const GroupSpec& group, const FieldOptions& options) {
  const auto& config = options.config;
  if (config.contains("lex") && config.at("lex").contains("group") &&
      !(GroupSpec::parse(config.at("lex").at("group").get<std::string>()) == group))
    throw UsageError("lex config is for " + config.at("lex").at("group").get<std::string>() + ", not " +
                     group.to_string());
  const GroupSpec line = GroupSpec::integer_lattice(1);
  const std::string alpha = config_string(config, "alpha", options.alpha, kDefaultAlpha);
  const auto quotient_spec = lex_order_spec(config, "quotient", "alpha:" + alpha);
  const auto kernel_spec = lex_order_spec(config, "kernel", "standard");
  OrderOracle quotient = make_order(line, quotient_spec, options, generate_ball(line, 8));
  OrderOracle kernel = make_order(group, kernel_spec, options, generate_ball(group, 1));
  LexScheme scheme = [&] {
    if (group.kind() == GroupKind::klein) return klein_lex_scheme(std::move(quotient), std::move(kernel));
    if (group.kind() == GroupKind::integer_lattice && group.rank() >= 2)
      return lattice_lex_scheme(group.rank(), std::move(quotient), std::move(kernel));
    throw UsageError("lex needs klein or zn:n with n >= 2, got " + group.to_string());
  }();
  return field_from_order(lex_order(std::move(scheme)), Provenance::lex);
}

}  // namespace

ConeField make_field(const GroupSpec& group, const FieldOptions& options, const Window& window) {
  const auto& kind = options.construct;
  const auto& config = options.config;
  if (kind == "embed") return embed_left_order(standard_cone(group));
  if (kind == "iota") return iota(standard_cone(group));
  if (kind == "alpha") {
    const auto alpha = QuadraticIrrational::parse(config_string(config, "alpha", options.alpha, kDefaultAlpha));
    return field_from_order(alpha_order(group, alpha), Provenance::alpha);
  }
  if (kind == "rf") {
    const auto phi = PhiFunction::parse(config_string(config, "phi", options.phi, kDefaultPhi));
    return rf_field(CofinalScheme::standard(group), phi, window, superadditivity_mode(options.superadditivity));
  }
  if (kind == "lex") return make_lex_field(group, options);
  if (kind == "table") {
    if (options.table_path.empty()) throw UsageError("--construct table needs --table");
    return finite_table_field(order_table_from_json(group, Json::parse(read_file(options.table_path))));
  }
  throw UsageError("unknown construction '" + kind + "'");
}

OrderOracle make_order(const GroupSpec& group, const std::string& spec, const FieldOptions& options,
                       const Window& window) {
  if (spec == "standard") {
    auto cone = standard_cone(group);
    return order_from_positive(group, cone.positive, cone.name);
  }
  if (spec == "reversed") {
    auto cone = reversed(standard_cone(group));
    return order_from_positive(group, cone.positive, cone.name);
  }
  if (spec.starts_with("alpha:")) return alpha_order(group, QuadraticIrrational::parse(spec.substr(6)));
  FieldOptions field_options = options;
  if (spec.starts_with("rf:")) {
    field_options.construct = "rf";
    field_options.phi = spec.substr(3);
  } else if (spec == "embed" || spec == "iota" || spec == "lex") {
    field_options.construct = spec;
  } else {
    throw UsageError("unknown order '" + spec + "'");
  }
  return order_from_field(make_field(group, field_options, window));
}

namespace {

std::uint64_t env_budget(std::uint64_t fallback) {
  const char* raw = std::getenv("ORDO_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  std::uint64_t value = 0;
  const std::string_view text(raw);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
    throw UsageError("ORDO_BUDGET must be a positive integer");
  return value;
}

std::vector<int> parse_radii(const std::string& text) {
  std::vector<int> radii;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    int r = -1;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + end, r);
    if (ec != std::errc() || ptr != text.data() + end || r < 0)
      throw UsageError("--radius-list must be comma-separated non-negative integers");
    radii.push_back(r);
    start = end + 1;
  }
  return radii;
}

struct Inputs {
  std::string group;
  std::string window = "ball:3";
  std::string out;
  std::string config_path;
  bool total = false;
  FieldOptions field;
};

struct Emitter {
  std::ostream& out;
  const std::string& path;

  void operator()(const Json& j) const {
    if (path.empty()) {
      out << dump(j);
      return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot write " + path);
    file << dump(j);
  }
};

void load_config(Inputs& in) {
  if (in.config_path.empty()) return;
  in.field.config = Json::parse(read_file(in.config_path));
  if (!in.field.config.is_object()) throw UsageError("config must be a JSON object");
}

GroupSpec resolve_group(const Inputs& in) {
  if (!in.group.empty()) return GroupSpec::parse(in.group);
  if (in.field.config.contains("group")) return GroupSpec::parse(in.field.config.at("group").get<std::string>());
  if (in.field.config.contains("lex") && in.field.config.at("lex").contains("group"))
    return GroupSpec::parse(in.field.config.at("lex").at("group").get<std::string>());
  throw UsageError("--group is required");
}

void add_common(CLI::App* cmd, Inputs& in) {
  cmd->add_option("--group", in.group, "zn:N | q-sub:p,... | free:K | klein");
  cmd->add_option("--window", in.window, "ball:r, a JSON element list, or a path to one")->capture_default_str();
  cmd->add_option("-o,--out", in.out, "write JSON here instead of standard output");
  cmd->add_option("--config", in.config_path, "JSON config with alpha, phi, group and lex settings");
}

void add_field_options(CLI::App* cmd, Inputs& in, bool with_construct) {
  if (with_construct)
    cmd->add_option("--construct", in.field.construct, "embed | iota | alpha | rf | lex | table")
        ->capture_default_str();
  cmd->add_option("--alpha", in.field.alpha, "quadratic irrational a+b√d");
  cmd->add_option("--phi", in.field.phi, "affine:k");
  cmd->add_option("--superadditivity", in.field.superadditivity, "strict | weak")->capture_default_str();
  cmd->add_option("--table", in.field.table_path, "OrderTable JSON for --construct table");
}

std::vector<Element> parse_element_list(const GroupSpec& group, const std::string& text) {
  const auto trimmed = text.find_first_not_of(" \t\n");
  if (trimmed != std::string::npos && text[trimmed] != '[')
    return elements_from_json(group, Json::parse(read_file(text)));
  return elements_from_json(group, Json::parse(text));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locally invariant orderings of torsion-free groups", "ordo"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Inputs in;
  std::string method;
  std::string r_text, r_file, problem_path, radius_list;
  bool canonical_r = false;
  std::string subset_text;
  std::size_t max_subset_size = 4;
  std::string first_order, second_order;
  std::string g_text, h_text;

  auto* check = app.add_subcommand("check-axioms", "check conditions (1)(2), and (3) with --total");
  add_common(check, in);
  add_field_options(check, in, true);
  check->add_flag("--total", in.total, "also check condition (3)");

  auto* construct = app.add_subcommand("construct", "build a field and report its axioms and order table");
  construct->add_option("kind", in.field.construct, "embed | iota | alpha | rf | lex | table")->required();
  add_common(construct, in);
  add_field_options(construct, in, false);
  construct->add_flag("--total", in.total, "treat condition (3) failures as violations");

  auto* extreme = app.add_subcommand("extreme-points", "classify the extreme points of a finite set");
  add_common(extreme, in);
  extreme->add_option("--subset", subset_text, "JSON element list (or path); defaults to the window");

  auto* scan = app.add_subcommand("diffuse-scan", "search window subsets for one without extreme points");
  add_common(scan, in);
  scan->add_option("--max-subset-size", max_subset_size)->capture_default_str()->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "extend a prescription R to a locally invariant order");
  solve->add_option("method", method, "peel | backtrack | tower")
      ->required()
      ->check(CLI::IsMember({"peel", "backtrack", "tower"}));
  add_common(solve, in);
  solve->add_option("--R", r_text, "JSON list of elements g with g < g^-1");
  solve->add_option("--R-file", r_file, "file holding the R list");
  solve->add_flag("--canonical-R", canonical_r, "R = canonically least element of every inverse pair");
  solve->add_option("--problem", problem_path, "problem JSON file");
  solve->add_option("--radius-list", radius_list, "tower radii, e.g. 1,2,3");
  solve->add_flag("--total", in.total, "require a total order");

  auto* compare = app.add_subcommand("compare-orders", "first pair on which two orders disagree");
  add_common(compare, in);
  add_field_options(compare, in, false);
  compare->add_option("--first", first_order, "standard | reversed | alpha:LIT | rf:affine:k | iota | embed | lex")
      ->required();
  compare->add_option("--second", second_order, "same forms as --first")->required();

  auto* act_cmd = app.add_subcommand("act", "apply (g, h) to a field and re-check the axioms");
  act_cmd->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
  add_common(act_cmd, in);
  add_field_options(act_cmd, in, true);
  act_cmd->add_option("--g", g_text, "right factor g")->required();
  act_cmd->add_option("--h", h_text, "conjugating factor h")->required();
  act_cmd->add_flag("--total", in.total, "also check condition (3)");

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Emitter emit{out, in.out};
  try {
    load_config(in);

    if (*check || *act_cmd) {
      const GroupSpec group = resolve_group(in);
      const Window window = parse_window(group, in.window);
      ConeField field = make_field(group, in.field, window);
      if (*check) {
        const auto report = cone_axiom_report(field, window, in.total);
        Json j = to_json(report);
        j["field"] = to_json(field);
        emit(j);
        return report.ok() ? 0 : 1;
      }
      const Element g = group.decode(g_text);
      const Element h = group.decode(h_text);
      ConeField acted = act(g, h, std::move(field));
      const Window adjusted = window.conjugated_by(h);
      const auto report = cone_axiom_report(acted, adjusted, in.total);
      emit(Json{{"field", to_json(acted)}, {"g", g_text}, {"h", h_text}, {"report", to_json(report)}});
      return report.ok() ? 0 : 1;
    }

    if (*construct) {
      const GroupSpec group = resolve_group(in);
      const Window window = parse_window(group, in.window);
      const ConeField field = make_field(group, in.field, window);
      const auto report = cone_axiom_report(field, window, true);
      const auto table = tabulate(order_from_field(field), window);
      emit(Json{{"field", to_json(field)}, {"report", to_json(report)}, {"order", to_json(table)}});
      const bool ok = in.total ? report.ok() : report.partial_ok();
      return ok ? 0 : 1;
    }

    if (*extreme) {
      const GroupSpec group = resolve_group(in);
      std::vector<Element> subset;
      if (!subset_text.empty()) {
        subset = parse_element_list(group, subset_text);
      } else {
        const Window window = parse_window(group, in.window);
        subset.assign(window.begin(), window.end());
      }
      emit(to_json(extreme_points(std::move(subset), group), group));
      return 0;
    }

    if (*scan) {
      const GroupSpec group = resolve_group(in);
      const Window window = parse_window(group, in.window);
      const auto report = diffuse_scan(window, max_subset_size, env_budget(10'000'000));
      emit(to_json(report, group));
      if (report.budget_exhausted) {
        err << "ordo: subset budget exhausted after " << report.checked << " subsets\n";
        return 2;
      }
      return report.counterexample ? 1 : 0;
    }

    if (*solve) {
      ExtensionProblem problem = [&] {
        if (!problem_path.empty()) {
          auto p = problem_from_json(Json::parse(read_file(problem_path)));
          if (in.total) p.require_total = true;
          return p;
        }
        const GroupSpec group = resolve_group(in);
        Window window = method == "tower" && !radius_list.empty()
                            ? generate_ball(group, parse_radii(radius_list).back())
                            : parse_window(group, in.window);
        std::vector<Element> r;
        if (canonical_r) {
          r = canonical_rset(window).elements();
        } else if (!r_file.empty()) {
          r = elements_from_json(group, Json::parse(read_file(r_file)));
        } else if (!r_text.empty()) {
          r = parse_element_list(group, r_text);
        }
        return ExtensionProblem{std::move(window), RSet(group, std::move(r)), in.total};
      }();
      const auto& group = problem.window.group();

      if (method == "peel") {
        const auto table = peel_solve(problem);
        const auto validation = validate_solution(table, problem);
        emit(to_json(table));
        if (!validation.ok()) {
          err << "ordo: solution failed validation: " << to_json(validation, group).dump() << "\n";
          return 1;
        }
        return 0;
      }
      if (method == "backtrack") {
        const auto result = backtrack_solve(problem, 12, env_budget(50'000'000));
        if (!result.sat()) {
          emit(Json{{"unsat", true}, {"nodes", result.nodes}});
          return 1;
        }
        emit(to_json(*result.table));
        return validate_solution(*result.table, problem).ok() ? 0 : 1;
      }
      if (radius_list.empty()) throw UsageError("solve tower needs --radius-list");
      const auto report = tower_solve(group, parse_radii(radius_list), problem.r, problem.require_total);
      emit(to_json(report));
      return report.all_coherent() ? 0 : 1;
    }

    if (*compare) {
      const GroupSpec group = resolve_group(in);
      const Window window = parse_window(group, in.window);
      const auto o1 = make_order(group, first_order, in.field, window);
      const auto o2 = make_order(group, second_order, in.field, window);
      Json j{{"first", o1.name}, {"second", o2.name}, {"window", elements_to_json(group, window.elements())}};
      if (const auto d = find_disagreement(o1, o2, window)) {
        j["disagreement"] = Json{{"pair", {group.encode(d->first), group.encode(d->second)}},
                                 {"first", to_string(o1.compare(d->first, d->second))},
                                 {"second", to_string(o2.compare(d->first, d->second))}};
      } else {
        j["disagreement"] = nullptr;
      }
      emit(j);
      return 0;
    }
  } catch (const Json::exception& e) {
    err << "ordo: malformed JSON: " << e.what() << "\n";
    return 2;
  } catch (const ExtensionError& e) {
    err << "ordo: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "ordo: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace ordo::cli
