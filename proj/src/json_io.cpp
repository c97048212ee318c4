#include "dftalg/json_io.hpp"

#include <cstdio>

#include "dftalg/error.hpp"

namespace dftalg {

using nlohmann::json;

namespace {

json complex_json(const FloatComplex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json clusters_json(const std::vector<EigenCluster>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
  return out;
}

std::size_t checked_size(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw Error(ErrorCode::InvalidArgument, "matrix dump needs n and entries");
  const int n = j.at("n").get<int>();
  const auto& rows = j.at("entries");
  if (n < 1 || !rows.is_array() || rows.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::InvalidArgument, "matrix dump has inconsistent size");
  for (const auto& row : rows)
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
      throw Error(ErrorCode::InvalidArgument, "matrix dump row has wrong length");
  return static_cast<std::size_t>(n);
}

}  // namespace

json to_json(const RelationReport& rep) {
  return {{"relation_id", rep.relation_id},
          {"n", rep.n},
          {"backend", rep.backend.name()},
          {"verdict", to_string(rep.verdict)},
          {"residual_inf_norm", rep.residual_inf_norm},
          {"scale", rep.scale}};
}

json to_json(const VerifyRecord& rec, bool timestamps) {
  json j = {{"kind", "relation"},
            {"relation_id", rec.relation_id},
            {"n", rec.n},
            {"backend", rec.backend.name()},
            {"verdict", to_string(rec.verdict)},
            {"residual_inf_norm", rec.residual_inf_norm}};
  if (timestamps) j["elapsed_ms"] = rec.elapsed_ms;
  json comps = json::array();
  for (const auto& c : rec.components) {
    comps.push_back({{"relation_id", c.relation_id},
                     {"verdict", to_string(c.verdict)},
                     {"residual_inf_norm", c.residual_inf_norm},
                     {"scale", c.scale}});
  }
  j["components"] = std::move(comps);
  if (!rec.observations.empty()) j["observations"] = rec.observations;
  return j;
}

json to_json(const SpectralReport& rep) {
  json j = {{"kind", "spectrum"},
            {"operator_id", rep.operator_id},
            {"n", rep.n},
            {"hermitian", rep.hermitian},
            {"rank", rep.rank},
            {"nullity", rep.nullity}};
  if (rep.hermitian) {
    j["eigenvalues"] = rep.eigenvalues;
    j["multiplicities"] = clusters_json(rep.clusters);
    j["degenerate"] = clusters_json(rep.degenerate_pairs);
  }
  return j;
}

json to_json(const LadderReport& rep) {
  json vecs = json::array();
  for (const auto& v : rep.vectors) {
    json row = json::array();
    for (const auto& z : v) row.push_back(complex_json(z));
    vecs.push_back(std::move(row));
  }
  return {{"kind", "ladder"},
          {"n", rep.n},
          {"null_dimension", rep.null_dimension},
          {"reflection_commutes", rep.reflection_commutes},
          {"generated", rep.generated},
          {"span_dimension", rep.span_dimension},
          {"dropped", rep.dropped},
          {"parities", rep.parities},
          {"all_symmetric", rep.all_symmetric},
          {"vectors", std::move(vecs)}};
}

json to_json(const OverlapTable& t) {
  return {{"kind", "overlap"},
          {"n", t.n},
          {"entries", matrix_to_json(t.entries).at("entries")},
          {"y_eigenrelation_exact", t.y_eigenrelation_exact},
          {"x_two_diagonal_exact", t.x_two_diagonal_exact},
          {"y_two_diagonal_exact", t.y_two_diagonal_exact},
          {"z_two_diagonal_exact", t.z_two_diagonal_exact},
          {"formula_deviation", t.formula_deviation},
          {"dft_deviation", t.dft_deviation},
          {"row_orthonormality_deviation", t.row_orthonormality_deviation},
          {"monomial_orthogonality_deviation", t.monomial_orthogonality_deviation},
          {"monomial_half_prefactor_deviation", t.monomial_half_prefactor_deviation}};
}

json matrix_to_json(const ExactMatrix& m) {
  const std::size_t n = m.size();
  json rows = json::array();
  unsigned order = 0;
  for (std::size_t r = 0; r < n; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < n; ++c) {
      const auto& s = m(r, c);
      order = s.field()->order();
      json coeffs = json::array();
      for (const auto& q : s.coeffs()) coeffs.push_back(q.get_str());
      row.push_back({{"order", order}, {"coeffs", std::move(coeffs)}});
    }
    rows.push_back(std::move(row));
  }
  return {{"n", n}, {"backend", "exact"}, {"order", order}, {"entries", std::move(rows)}};
}

json matrix_to_json(const FloatMatrix& m) {
  const std::size_t n = m.size();
  json rows = json::array();
  for (std::size_t r = 0; r < n; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < n; ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"n", n}, {"backend", "float"}, {"entries", std::move(rows)}};
}

ExactMatrix exact_matrix_from_json(const json& j) {
  const std::size_t n = checked_size(j);
  const auto& rows = j.at("entries");
  const unsigned order = rows.at(0).at(0).at("order").get<unsigned>();
  const auto field = CycloField::get(order);
  ExactMatrix m(n, CycloScalar::zero(field));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const auto& e = rows[r][c];
      if (e.at("order").get<unsigned>() != order)
        throw Error(ErrorCode::OrderMismatch, "matrix dump mixes cyclotomic orders");
      RationalPoly coeffs;
      for (const auto& q : e.at("coeffs")) {
        mpq_class v;
        if (v.set_str(q.get<std::string>(), 10) != 0)
          throw Error(ErrorCode::InvalidArgument, "bad rational '" + q.get<std::string>() + "'");
        v.canonicalize();
        coeffs.push_back(v);
      }
      m(r, c) = CycloScalar(field, std::move(coeffs));
    }
  }
  return m;
}

FloatMatrix float_matrix_from_json(const json& j) {
  const std::size_t n = checked_size(j);
  const auto& rows = j.at("entries");
  FloatMatrix m(n, FloatComplex{});
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = {rows[r][c].at("re").get<double>(), rows[r][c].at("im").get<double>()};
  return m;
}

std::string to_text(const VerifyRecord& rec) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-22s N=%-3d %-5s %-12s residual=%.3e", rec.relation_id.c_str(),
                rec.n, rec.backend.name(), to_string(rec.verdict), rec.residual_inf_norm);
  std::string out = buf;
  for (const auto& c : rec.components) {
    if (c.passed()) continue;
    std::snprintf(buf, sizeof buf, "\n  %-30s %-12s residual=%.3e", c.relation_id.c_str(),
                  to_string(c.verdict), c.residual_inf_norm);
    out += buf;
  }
  return out;
}

}  // namespace dftalg
