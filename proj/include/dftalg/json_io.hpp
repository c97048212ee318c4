#pragma once

#include "json.hpp"

#include <string>

#include "dftalg/matrix.hpp"
#include "dftalg/relations.hpp"
#include "dftalg/runner.hpp"
#include "dftalg/spectral.hpp"

namespace dftalg {

nlohmann::json to_json(const RelationReport& rep);
nlohmann::json to_json(const VerifyRecord& rec, bool timestamps = true);
nlohmann::json to_json(const SpectralReport& rep);
nlohmann::json to_json(const LadderReport& rep);
nlohmann::json to_json(const OverlapTable& table);

// {n, backend, entries}: float entries {re, im}, exact entries
// {order, coeffs} with rational coefficients as strings.
nlohmann::json matrix_to_json(const ExactMatrix& m);
nlohmann::json matrix_to_json(const FloatMatrix& m);

ExactMatrix exact_matrix_from_json(const nlohmann::json& j);
FloatMatrix float_matrix_from_json(const nlohmann::json& j);

std::string to_text(const VerifyRecord& rec);

}  // namespace dftalg
