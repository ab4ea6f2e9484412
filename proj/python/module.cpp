#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gradedgrowth/ball.hpp"
#include "gradedgrowth/cli.hpp"
#include "gradedgrowth/error.hpp"
#include "gradedgrowth/filtration.hpp"
#include "gradedgrowth/gs.hpp"
#include "gradedgrowth/magnus.hpp"
#include "gradedgrowth/registry.hpp"

namespace py = pybind11;
using namespace gradedgrowth;

namespace {

// Rationals cross the boundary as "p/q" strings; the package wraps them in
// fractions.Fraction.
py::dict certificate_dict(const GsCertificate& c) {
  py::dict d;
  d["is_gs"] = c.is_gs;
  d["t"] = to_string(c.t);
  d["value"] = to_string(c.value);
  d["d"] = c.d;
  d["p"] = c.p;
  d["degrees"] = c.degrees;
  d["grid"] = c.grid;
  d["assumed_min_degree"] = c.assumed_min_degree;
  d["verified"] = verify_gs_certificate(c);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "graded growth of group algebras";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<UsageError>(m, "UsageError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<ContractError>(m, "ContractError", base.ptr());
  py::register_exception<SearchFailure>(m, "SearchFailure", base.ptr());

  m.def(
      "graded_dims",
      [](const std::string& group, std::uint32_t p, std::size_t max_n) {
        GroupRegistry reg;
        auto dims = graded_dims(reg.finite_group(group), p, max_n);
        while (!dims.empty() && dims.back() == 0) dims.pop_back();
        return dims;
      },
      py::arg("group"), py::arg("p") = 2, py::arg("max_n") = 64,
      "Dimensions r_n of the augmentation-power quotients of F_p[G] for a finite group.");

  m.def(
      "growth_report",
      [](const std::vector<std::size_t>& dims) {
        const GrowthReport r = growth_report(dims);
        py::dict d;
        d["dims"] = r.dims;
        d["roots"] = r.roots;
        d["fekete_n"] = r.fekete_n;
        d["fekete_estimate"] = r.fekete_estimate;
        d["min_at_last"] = r.min_at_last;
        d["violations"] = r.violations;
        return d;
      },
      py::arg("dims"));

  m.def("free_graded_dims", [](std::size_t k, std::size_t n_max, std::uint32_t p) { return free_graded_dims(k, n_max, p); },
        py::arg("k"), py::arg("n_max"), py::arg("p") = 2);
  m.def("witt_ranks", &witt_ranks, py::arg("k"), py::arg("n_max"));

  m.def(
      "relator_degrees",
      [](const std::vector<std::string>& relators, std::size_t rank, std::uint32_t p, std::size_t max_deg) {
        return relator_degrees(relators, rank, p, max_deg);
      },
      py::arg("relators"), py::arg("rank"), py::arg("p") = 2, py::arg("max_deg") = kDefaultMagnusDegree);

  m.def(
      "gs_certificate",
      [](std::size_t d, const std::vector<std::size_t>& degrees, std::uint32_t p, std::size_t grid) {
        GSPresentation pres;
        pres.d = d;
        pres.p = p;
        for (std::size_t deg : degrees) pres.degrees.emplace_back(deg);
        return certificate_dict(gs_certificate(pres, grid));
      },
      py::arg("d"), py::arg("degrees"), py::arg("p") = 2, py::arg("grid") = kDefaultGsGrid);

  m.def(
      "find_dead_ends",
      [](const std::string& group, std::size_t radius) {
        GroupRegistry reg;
        const auto g = reg.group(group);
        std::vector<std::string> out;
        for (const auto& e : find_dead_ends(*g, radius)) out.push_back(g->format(e));
        return out;
      },
      py::arg("group"), py::arg("radius"));

  m.def("builtin_finite_groups", &builtin_finite_groups);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line interface in-process; returns (exit_code, stdout, stderr).");
}
