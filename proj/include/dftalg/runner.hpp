#pragma once

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "dftalg/relations.hpp"

namespace dftalg {

enum class BackendChoice { Exact, Float, Both };
enum class OutputFormat { Json, Text };

struct RunConfig {
  std::vector<int> n_values;
  std::vector<std::string> relations{"all"};
  BackendChoice backend = BackendChoice::Both;
  std::string output_path;  // empty: standard output
  OutputFormat format = OutputFormat::Json;
  std::uint64_t seed = 1;
  bool timestamps = true;
};

// "3..9", "5", "3,5,7..9"; every value must be at least 3.
std::vector<int> parse_n_values(const std::string& text);

// Relation groups in report order.
const std::vector<std::string>& relation_groups();

// Expands "all" and rejects unknown ids (InvalidArgument).
std::vector<std::string> resolve_relations(const std::vector<std::string>& requested);

BackendChoice parse_backend(const std::string& text);

/// One report record: a relation group evaluated at one N in one backend.
struct VerifyRecord {
  std::string relation_id;
  int n = 0;
  ScalarBackend backend;
  Verdict verdict = Verdict::Failed;
  double residual_inf_norm = 0.0;
  double elapsed_ms = 0.0;
  std::vector<RelationReport> components;
  nlohmann::json observations = nlohmann::json::object();
};

// Failed dominates Degenerate, which dominates ResidualNorm over ExactZero.
Verdict aggregate_verdict(const std::vector<RelationReport>& components);

// Random intertwiner parameters: small Gaussian rationals (a + b i)/d,
// identical for both backends, derived from (seed, n).
struct RationalComplex {
  long re_num, im_num, den;
};
struct RandomParams {
  RationalComplex alpha, beta;
};
RandomParams random_params(std::uint64_t seed, int n);

VerifyRecord run_relation_group(const std::string& group, int n, ScalarBackend::Mode mode,
                                std::uint64_t seed);

// Parallel across (N, group, backend); capped by VERIFIER_MAX_THREADS.
// Output order is (N, group registry order, exact before float).
std::vector<VerifyRecord> run_verify(const RunConfig& config);

// 1 if any record Failed, else 0.
int verify_exit_code(const std::vector<VerifyRecord>& records);

unsigned max_threads_from_env();

}  // namespace dftalg
