#include "affine_fock/cli.hpp"
#include "affine_fock/core_quotient.hpp"
#include "affine_fock/errors.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace affine_fock;

namespace {

std::vector<int> parts_of(const Partition& p) { return p.parts(); }

PartitionTuple tuple_of(const std::vector<std::vector<int>>& q) {
  PartitionTuple out;
  for (const auto& parts : q) out.emplace_back(parts);
  return out;
}

}  // namespace

PYBIND11_MODULE(_affine_fock, m) {
  m.doc() = "Exact level-one Fock space computations for affine sl_l";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);
  py::register_exception<WindowOverflow>(m, "WindowOverflow", PyExc_OverflowError);

  m.def(
      "core_quotient",
      [](const std::vector<int>& lambda, int l) {
        const CoreQuotient cq = core_and_quotient(Partition(lambda), l);
        std::vector<std::vector<int>> q;
        for (const auto& p : cq.q) q.push_back(parts_of(p));
        return py::make_tuple(cq.c, q);
      },
      py::arg("lambda_"), py::arg("l"), "Core vector and l-quotient of a partition.");

  m.def(
      "cq_inverse",
      [](const std::vector<int>& c, const std::vector<std::vector<int>>& q, int l) {
        return parts_of(cq_inverse(c, tuple_of(q), l));
      },
      py::arg("c"), py::arg("q"), py::arg("l"), "Partition with the given core vector and quotient.");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = cli::run(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
