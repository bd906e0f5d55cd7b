#include "diskdecomp/decomp.hpp"
#include "diskdecomp/error.hpp"
#include "diskdecomp/json_io.hpp"
#include "diskdecomp/robustness.hpp"
#include "diskdecomp/svg.hpp"
#include "diskdecomp/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;
using namespace diskdecomp;

namespace {

// Results cross the boundary as JSON so Python sees the same schemas as the CLI.
py::object to_python(const Json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

Json from_python(const py::object& o)
{
    const auto text = py::module_::import("json").attr("dumps")(o).cast<std::string>();
    return Json::parse(text);
}

CanonicalFunction canonical(const std::vector<Level>& values)
{
    return canonicalize(CircularSequence(values));
}

Configuration configuration(const py::object& o)
{
    return configuration_from_json(from_python(o));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Decompose landmark-count functions on S1 into sums of disk indicators.";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<FormatError>(m, "FormatError", error.ptr());

    m.attr("DEFAULT_TOL") = kDefaultTol;
    m.attr("DEFAULT_CAP") = kDefaultEnumerationCap;
    m.attr("RNG_ALGORITHM") = std::string(kRngAlgorithm);

    m.def("parse_sequence",
          [](const std::string& text) { return parse_sequence(text).values(); },
          py::arg("text"));

    m.def("canonicalize", [](const std::vector<Level>& s) { return canonical(s).values(); },
          py::arg("seq"), "Merged least rotation of the class.");

    m.def("analyze",
          [](const std::vector<Level>& s, std::uint64_t cap) {
              return to_python(stats_json(canonical(s), cap));
          },
          py::arg("seq"), py::arg("cap") = kDefaultEnumerationCap);

    m.def("count",
          [](const std::vector<Level>& s, std::uint64_t cap) {
              return to_python(count_json(count_robust(canonical(s), cap)));
          },
          py::arg("seq"), py::arg("cap") = kDefaultEnumerationCap,
          "Exact count as an int, or {'lower', 'upper'} bounds.");

    m.def("decompose",
          [](const std::vector<Level>& s, const std::string& mode, std::optional<Level> n,
             bool realize_landmarks, std::uint64_t cap) -> py::object {
              const CanonicalFunction c = canonical(s);
              const BoundaryLayout layout = default_layout(c);
              if (mode == "all") {
                  Json out = Json::array();
                  for (const auto& d : enumerate_robust(c, layout, cap)) {
                      out.push_back(decomposition_json(d, realize_landmarks));
                  }
                  return to_python(out);
              }
              CombinatorialDecomposition d;
              if (mode == "minimal") {
                  d = minimal_base_decomposition(c, layout);
              } else if (mode == "max-base") {
                  d = max_base_decomposition(c, layout);
              } else if (mode == "n") {
                  if (!n) {
                      throw FormatError("mode 'n' needs n");
                  }
                  d = generate_for_n(c, layout, *n);
              } else {
                  throw FormatError("unknown mode '" + mode + "'");
              }
              return to_python(decomposition_json(d, realize_landmarks));
          },
          py::arg("seq"), py::arg("mode") = "all", py::arg("n") = py::none(),
          py::arg("realize") = false, py::arg("cap") = kDefaultEnumerationCap,
          "mode is 'all', 'n', 'minimal' or 'max-base'.");

    m.def("forward",
          [](const py::object& cfg, double tol) {
              return canonical_rotation(seq(configuration(cfg), tol)).values();
          },
          py::arg("config"), py::arg("tol") = kDefaultTol,
          "Sequence representation (least rotation) of {'landmarks': [...]}.");

    m.def("check",
          [](const py::object& cfg, std::optional<std::size_t> N, double tol) {
              const Configuration c = configuration(cfg);
              Json j = verdict_json(is_robust(c, tol));
              j["properly_usc"] = is_properly_usc(c, tol).properly_usc;
              j["maximizes_dof"] = maximizes_dof(c, tol);
              if (N) {
                  j["dof"] = dof_json(dof(c, *N, tol));
              }
              return to_python(j);
          },
          py::arg("config"), py::arg("N") = py::none(), py::arg("tol") = kDefaultTol);

    m.def("perturb",
          [](const py::object& cfg, double eps, std::size_t trials, std::uint64_t seed,
             double tol) {
              const PerturbationSpec spec{eps, trials, seed};
              const Configuration c = configuration(cfg);
              PerturbationReport report;
              {
                  py::gil_scoped_release release;
                  report = perturb_trial(c, spec, tol);
              }
              return to_python(report_json(report));
          },
          py::arg("config"), py::arg("eps") = 1e-4, py::arg("trials") = 1000,
          py::arg("seed") = 0, py::arg("tol") = kDefaultTol);

    m.def("render_svg",
          [](const py::object& cfg, double tol) { return render_svg(configuration(cfg), tol); },
          py::arg("config"), py::arg("tol") = kDefaultTol);
}
