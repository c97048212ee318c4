#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dftalg/error.hpp"
#include "dftalg/json_io.hpp"
#include "dftalg/operators.hpp"
#include "dftalg/relations.hpp"
#include "dftalg/runner.hpp"
#include "dftalg/spectral.hpp"

namespace py = pybind11;
using namespace dftalg;

namespace {

std::vector<std::vector<FloatComplex>> rows(const FloatMatrix& m) {
  std::vector<std::vector<FloatComplex>> out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out[r].push_back(m(r, c));
  return out;
}

std::string verify_json(const std::vector<int>& n_values, const std::vector<std::string>& relations,
                        const std::string& backend, std::uint64_t seed) {
  RunConfig cfg;
  cfg.n_values = n_values;
  cfg.relations = relations;
  cfg.backend = parse_backend(backend);
  cfg.seed = seed;
  cfg.timestamps = false;
  std::vector<VerifyRecord> recs;
  {
    py::gil_scoped_release release;
    recs = run_verify(cfg);
  }
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : recs) out.push_back(to_json(r, false));
  return out.dump();
}

std::string spectrum_json(int n, const std::string& op) {
  if (op == "ladder") return to_json(ladder_hierarchy(n)).dump();
  if (op == "overlap") return to_json(eigenbasis_epsilon(n)).dump();
  const auto m = named_operator(FloatOperators(n), op);
  if (inf_norm(m - m.adjoint()) <= kHermitianTolerance) return to_json(hermitian_spectrum(m, op)).dump();
  return to_json(rank_report(named_operator(ExactOperators(n), op), op)).dump();
}

}  // namespace

PYBIND11_MODULE(_dftalg, m) {
  m.doc() = "Operator family of the N-point DFT: exact and floating point checks";

  py::register_exception<Error>(m, "DftalgError", PyExc_ValueError);

  m.def("field_order_for", &field_order_for, py::arg("n"));
  m.def("operator_ids", &operator_ids);
  m.def("relation_groups", &relation_groups);

  m.def("operator_matrix",
        [](int n, const std::string& id) { return rows(named_operator(FloatOperators(n), id)); },
        py::arg("n"), py::arg("operator_id"), "Float matrix as nested lists (phi is normalized).");
  m.def("operator_matrix_exact_json",
        [](int n, const std::string& id) {
          return matrix_to_json(named_operator(ExactOperators(n), id)).dump();
        },
        py::arg("n"), py::arg("operator_id"));

  m.def("verify_json", &verify_json, py::arg("n_values"), py::arg("relations") = std::vector<std::string>{"all"},
        py::arg("backend") = "both", py::arg("seed") = 1);
  m.def("spectrum_json", &spectrum_json, py::arg("n"), py::arg("operator_id"));

  m.def("intertwiner_space_dimension", &intertwiner_space_dimension, py::arg("n"));
  m.def("exact_rank", [](int n, const std::string& id) {
    return rank_report(named_operator(ExactOperators(n), id), id).rank;
  }, py::arg("n"), py::arg("operator_id"));
}
