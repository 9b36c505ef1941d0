// Copyright 2026 The icx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Python bindings. Instances and schemes cross the boundary as JSON text in
// the same format the command-line tool reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "icx/errors.h"
#include "icx/hard_instances.h"
#include "icx/io.h"
#include "icx/report.h"

namespace py = pybind11;

namespace {

using icx::json;

icx::Instance Load(const std::string& text) {
  return icx::ParseInstanceText(text);
}

icx::ReportSettings Settings(double tol, double alpha_grid) {
  return {tol, alpha_grid, false};
}

std::string Solve(const std::string& instance, const std::string& mode,
                  double tol) {
  return icx::SolveReport(Load(instance), icx::ParseSolveMode(mode),
                          Settings(tol, 1e-4))
      .dump();
}

std::string Eval(const std::string& instance, const std::string& scheme,
                 double tol) {
  const icx::Instance inst = Load(instance);
  json j;
  try {
    j = json::parse(scheme);
  } catch (const json::parse_error& e) {
    throw icx::InputError(std::string("invalid scheme JSON: ") + e.what());
  }
  return icx::EvalReport(inst, icx::ParseScheme(j, inst), Settings(tol, 1e-4))
      .dump();
}

std::string Compare(const std::string& instance, const std::string& mode,
                    double alpha_grid) {
  return icx::CompareReport(Load(instance), icx::ParseSolveMode(mode),
                            Settings(icx::kDefaultTol, alpha_grid))
      .dump();
}

std::string CheckCostFn(const std::string& instance, std::uint64_t seed,
                        int samples) {
  return icx::CheckCostFnReport(Load(instance), seed, samples).dump();
}

std::string Gen(const std::string& family, int n, int k, std::uint64_t seed) {
  if (family == "intro") return icx::InstanceToJson(icx::GenIntroExample()).dump();
  if (family == "gap") return icx::InstanceToJson(icx::GenGapInstance(n)).dump();
  if (family == "nonic") {
    return icx::InstanceToJson(icx::GenNonIcExample().instance).dump();
  }
  if (family == "xos-hard") {
    return icx::InstanceToJson(icx::GenXosHard(icx::HardParams::Random(k, seed)))
        .dump();
  }
  throw icx::InputError("unknown family '" + family + "'");
}

std::string RunQueryExperiment(int k, int trials, std::uint64_t seed,
                               std::optional<int> m) {
  return icx::QueryExperimentToJson(icx::QueryExperiment(k, trials, seed, m))
      .dump();
}

}  // namespace

PYBIND11_MODULE(_icx, m) {
  m.doc() = "Optimal incentive-compatible inspection schemes";

  static py::exception<icx::ValidationError> validation_error(
      m, "ValidationError", PyExc_ValueError);
  static py::exception<icx::CostClassError> cost_class_error(
      m, "CostClassError", PyExc_ValueError);
  static py::exception<icx::SizeLimitError> size_limit_error(
      m, "SizeLimitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const icx::ValidationError& e) {
      validation_error(e.what());
    } catch (const icx::CostClassError& e) {
      cost_class_error(e.what());
    } catch (const icx::SizeLimitError& e) {
      size_limit_error(e.what());
    }
  });

  m.attr("__version__") = icx::kToolVersion;
  m.def("solve", &Solve, py::arg("instance"), py::arg("mode") = "det",
        py::arg("tol") = icx::kDefaultTol);
  m.def("eval_scheme", &Eval, py::arg("instance"), py::arg("scheme"),
        py::arg("tol") = icx::kDefaultTol);
  m.def("compare", &Compare, py::arg("instance"), py::arg("mode") = "det",
        py::arg("alpha_grid") = 1e-4);
  m.def("check_costfn", &CheckCostFn, py::arg("instance"), py::arg("seed") = 1,
        py::arg("samples") = 20000);
  m.def("gen", &Gen, py::arg("family"), py::arg("n") = 10, py::arg("k") = 7,
        py::arg("seed") = 1);
  m.def("query_experiment", &RunQueryExperiment, py::arg("k") = 13,
        py::arg("trials") = 500, py::arg("seed") = 1,
        py::arg("m") = std::nullopt);
}
