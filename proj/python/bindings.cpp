#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "comather/cli.hpp"
#include "comather/csm.hpp"
#include "comather/kl.hpp"
#include "comather/mather.hpp"

namespace py = pybind11;
using namespace comather;

namespace {

std::map<std::string, std::string> by_label(const SchubertClass& c) {
  std::map<std::string, std::string> out;
  for (const auto& [w, p] : c.terms()) out[c.space().label(w)] = p.to_string();
  return out;
}

std::tuple<int, std::string, std::string> run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"comather"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Chern-Mather, CSM and Kazhdan-Lusztig classes of cominuscule Schubert varieties";

  m.def("run_cli", &run, py::arg("args"), "Run the comather CLI in-process; returns (exit code, stdout, stderr).");

  m.def(
      "mather",
      [](const std::string& space, const std::string& w, bool equivariant) {
        FlagSpace s = FlagSpace::parse(space);
        return by_label(mather_class(s, s.parse_element(w), equivariant).downstairs);
      },
      py::arg("space"), py::arg("w"), py::arg("equivariant") = false,
      "Mather class as a map from Schubert label to coefficient.");

  m.def(
      "csm",
      [](const std::string& space, const std::string& w, bool equivariant) {
        FlagSpace s = FlagSpace::parse(space);
        return by_label(csm_cell(s, s.parse_element(w), equivariant));
      },
      py::arg("space"), py::arg("w"), py::arg("equivariant") = false, "CSM class of a Schubert cell.");

  m.def(
      "euler",
      [](const std::string& space, const std::string& w) {
        FlagSpace s = FlagSpace::parse(space);
        std::map<std::string, long> out;
        for (const auto& [v, e] : euler_obstructions(s, s.parse_element(w)).values) out[s.label(v)] = e.get_si();
        return out;
      },
      py::arg("space"), py::arg("w"), "Local Euler obstructions keyed by stratum label.");

  m.def(
      "cc_irreducible",
      [](const std::string& space, const std::string& w) {
        FlagSpace s = FlagSpace::parse(space);
        return cc_multiplicities(s, s.parse_element(w)).irreducible();
      },
      py::arg("space"), py::arg("w"), "Whether the characteristic cycle of the IC sheaf is irreducible.");

  py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);
}
