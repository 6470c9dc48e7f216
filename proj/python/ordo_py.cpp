#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ordo/cli.hpp"
#include "ordo/constructions.hpp"
#include "ordo/diffuse.hpp"
#include "ordo/extend.hpp"
#include "ordo/io.hpp"

namespace py = pybind11;
using namespace ordo;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<Element> decode_all(const GroupSpec& g, const std::vector<std::string>& items) {
  std::vector<Element> out;
  for (const auto& s : items) out.push_back(g.decode(s));
  return out;
}

ExtensionProblem make_problem(const std::string& group, const std::string& window,
                              const std::vector<std::string>& r, bool total) {
  const auto g = GroupSpec::parse(group);
  return {parse_window(g, window), RSet(g, decode_all(g, r)), total};
}

}  // namespace

PYBIND11_MODULE(_ordo, m) {
  m.doc() = "Locally invariant orderings of torsion-free groups";

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run the command line interface; returns (exit code, stdout, stderr).");

  m.def(
      "ball",
      [](const std::string& group, int radius) {
        const auto g = GroupSpec::parse(group);
        const auto w = generate_ball(g, radius);
        std::vector<std::string> out;
        for (const auto& e : w) out.push_back(g.encode(e));
        return out;
      },
      py::arg("group"), py::arg("radius"));

  m.def(
      "compose",
      [](const std::string& group, const std::string& a, const std::string& b) {
        const auto g = GroupSpec::parse(group);
        return g.encode(g.compose(g.decode(a), g.decode(b)));
      },
      py::arg("group"), py::arg("g"), py::arg("h"));

  m.def(
      "invert",
      [](const std::string& group, const std::string& a) {
        const auto g = GroupSpec::parse(group);
        return g.encode(g.invert(g.decode(a)));
      },
      py::arg("group"), py::arg("g"));

  m.def(
      "is_extreme",
      [](const std::string& group, const std::string& a, const std::vector<std::string>& subset) {
        const auto g = GroupSpec::parse(group);
        const auto c = is_extreme(g.decode(a), decode_all(g, subset), g);
        py::object witness = py::none();
        if (c.witness) witness = py::str(g.encode(*c.witness));
        return py::make_tuple(c.extreme, witness);
      },
      py::arg("group"), py::arg("a"), py::arg("subset"));

  m.def(
      "extreme_points",
      [](const std::string& group, const std::vector<std::string>& subset) {
        const auto g = GroupSpec::parse(group);
        return to_python(to_json(extreme_points(decode_all(g, subset), g), g));
      },
      py::arg("group"), py::arg("subset"));

  m.def(
      "diffuse_scan",
      [](const std::string& group, const std::string& window, std::size_t max_subset_size) {
        const auto g = GroupSpec::parse(group);
        return to_python(to_json(diffuse_scan(parse_window(g, window), max_subset_size), g));
      },
      py::arg("group"), py::arg("window"), py::arg("max_subset_size"));

  m.def(
      "check_axioms",
      [](const std::string& group, const std::string& construct, const std::string& window, bool total,
         const std::string& alpha, const std::string& phi, const std::string& superadditivity) {
        const auto g = GroupSpec::parse(group);
        const auto w = parse_window(g, window);
        cli::FieldOptions options;
        options.construct = construct;
        options.alpha = alpha;
        options.phi = phi;
        options.superadditivity = superadditivity;
        return to_python(to_json(cone_axiom_report(cli::make_field(g, options, w), w, total)));
      },
      py::arg("group"), py::arg("construct"), py::arg("window") = "ball:3", py::arg("total") = false,
      py::arg("alpha") = "", py::arg("phi") = "", py::arg("superadditivity") = "strict");

  m.def(
      "compare_alpha",
      [](const std::string& a, const std::string& b, const std::string& alpha) {
        return std::string(
            to_string(compare_alpha(parse_rational(a), parse_rational(b), QuadraticIrrational::parse(alpha))));
      },
      py::arg("a"), py::arg("b"), py::arg("alpha"));

  m.def(
      "alpha_witness",
      [](const std::string& alpha, const std::string& beta, const std::string& group, std::int64_t bound) {
        const auto w = alpha_distinctness_witness(QuadraticIrrational::parse(alpha), QuadraticIrrational::parse(beta),
                                                  GroupSpec::parse(group), bound);
        if (!w) return py::object(py::none());
        py::dict d;
        d["a"] = format_rational(w->a);
        d["alpha_scaled"] = w->alpha_scaled.to_string();
        d["beta_scaled"] = w->beta_scaled.to_string();
        d["verified"] = w->verified;
        return py::object(std::move(d));
      },
      py::arg("alpha"), py::arg("beta"), py::arg("group"), py::arg("search_bound") = 1024);

  m.def(
      "peel_solve",
      [](const std::string& group, const std::string& window, const std::vector<std::string>& r, bool total) {
        return to_python(to_json(peel_solve(make_problem(group, window, r, total))));
      },
      py::arg("group"), py::arg("window"), py::arg("R"), py::arg("total") = false);

  m.def(
      "backtrack_solve",
      [](const std::string& group, const std::string& window, const std::vector<std::string>& r, bool total) {
        const auto result = backtrack_solve(make_problem(group, window, r, total));
        if (!result.sat()) return to_python(Json{{"unsat", true}, {"nodes", result.nodes}});
        return to_python(to_json(*result.table));
      },
      py::arg("group"), py::arg("window"), py::arg("R"), py::arg("total") = false);

  m.def(
      "tower_solve",
      [](const std::string& group, const std::vector<int>& radii, const std::vector<std::string>& r, bool total) {
        const auto g = GroupSpec::parse(group);
        return to_python(to_json(tower_solve(g, radii, RSet(g, decode_all(g, r)), total)));
      },
      py::arg("group"), py::arg("radii"), py::arg("R"), py::arg("total") = false);

  py::register_exception<ExtensionError>(m, "ExtensionError", PyExc_ValueError);
}
