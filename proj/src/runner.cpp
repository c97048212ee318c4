#include "dftalg/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <mutex>
#include <thread>

#include "dftalg/error.hpp"

namespace dftalg {

std::vector<int> parse_n_values(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  const auto parse_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw Error(ErrorCode::InvalidArgument, "bad dimension '" + s + "' in '" + text + "'");
    }
    return v;
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw Error(ErrorCode::InvalidArgument, "empty item in '" + text + "'");
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const int lo = parse_int(item.substr(0, dots));
    const int hi = parse_int(item.substr(dots + 2));
    if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty range '" + item + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "no dimensions given");
  for (int v : out) require_dimension(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<std::string>& relation_groups() {
  static const std::vector<std::string> groups = {
      "intertwining", "cubic",        "jacobi",          "casimir_q1",
      "aw",           "aw3",          "so3q",            "so3q_cyclic",
      "aw3_casimir",  "heun",         "heun_casimir",    "heun_rescaled",
      "heun_casimir_rescaled",        "dft_commute",     "unitary",
      "circulant",
  };
  return groups;
}

std::vector<std::string> resolve_relations(const std::vector<std::string>& requested) {
  const auto& known = relation_groups();
  std::vector<bool> wanted(known.size(), false);
  for (const auto& r : requested) {
    if (r == "all") {
      std::fill(wanted.begin(), wanted.end(), true);
      continue;
    }
    auto it = std::find(known.begin(), known.end(), r);
    if (it == known.end()) throw Error(ErrorCode::InvalidArgument, "unknown relation id '" + r + "'");
    wanted[static_cast<std::size_t>(it - known.begin())] = true;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < known.size(); ++i)
    if (wanted[i]) out.push_back(known[i]);
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "no relations requested");
  return out;
}

BackendChoice parse_backend(const std::string& text) {
  if (text == "exact") return BackendChoice::Exact;
  if (text == "float") return BackendChoice::Float;
  if (text == "both") return BackendChoice::Both;
  throw Error(ErrorCode::InvalidArgument, "unknown backend '" + text + "'");
}

Verdict aggregate_verdict(const std::vector<RelationReport>& components) {
  if (components.empty()) return Verdict::Failed;
  const auto has = [&](Verdict v) {
    return std::any_of(components.begin(), components.end(),
                       [v](const RelationReport& r) { return r.verdict == v; });
  };
  if (has(Verdict::Failed)) return Verdict::Failed;
  if (has(Verdict::Degenerate)) return Verdict::Degenerate;
  if (has(Verdict::ResidualNorm)) return Verdict::ResidualNorm;
  return Verdict::ExactZero;
}

RandomParams random_params(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
  std::uniform_int_distribution<long> numer(-5, 5);
  std::uniform_int_distribution<long> denom(1, 4);
  const auto draw = [&] {
    RationalComplex z{numer(rng), numer(rng), denom(rng)};
    if (z.re_num == 0 && z.im_num == 0) z.re_num = 1;
    return z;
  };
  const RationalComplex alpha = draw();
  const RationalComplex beta = draw();
  return {alpha, beta};
}

namespace {

template <class Field>
typename Field::scalar make_scalar(const Field& f, const RationalComplex& z) {
  return f.rational(z.re_num, z.den) + f.rational(z.im_num, z.den) * f.imag_unit();
}

nlohmann::json complex_json(const FloatComplex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

template <class Field>
std::vector<RelationReport> run_group(const std::string& group, int n, std::uint64_t seed,
                                      nlohmann::json& obs) {
  const OperatorSet<Field> ops(n);
  const auto g = make_generators(ops);
  if (group == "intertwining") {
    const auto rp = random_params(seed, n);
    const auto& f = ops.field();
    const auto alpha = make_scalar(f, rp.alpha);
    const auto beta = make_scalar(f, rp.beta);
    const auto alpha_t = Field::conj(alpha);
    const auto beta_t = Field::conj(beta);
    obs["alpha"] = complex_json(Field::to_complex(alpha));
    obs["beta"] = complex_json(Field::to_complex(beta));
    auto reports = check_intertwining(ops, IntertwinerParams<typename Field::scalar>{alpha, beta, alpha_t, beta_t});
    return reports;
  }
  if (group == "cubic") return check_cubic_algebra(ops, g);
  if (group == "jacobi") return check_jacobi_decomposition(ops, g);
  if (group == "casimir_q1") {
    auto res = casimir_Q1(ops, g);
    if (res.q1) {
      obs["q1_scalar"] = res.is_scalar;
      obs["q1_trace_over_n"] = complex_json(res.scalar_value);
    }
    return res.reports;
  }
  if (group == "aw") return check_AW_terwilliger(ops, g.x, g.y);
  if (group == "aw3") return check_AW3_cyclic(ops, g);
  if (group == "so3q") return check_so3q(ops);
  if (group == "so3q_cyclic") return check_so3q_cyclic(ops);
  if (group == "aw3_casimir") {
    auto res = casimir_AW3(ops, g);
    obs["value"] = complex_json(Field::to_complex(*res.value));
    return res.reports;
  }
  if (group == "heun") return check_heun_algebra(ops, g, HeunReading::Standard);
  if (group == "heun_rescaled") return check_heun_algebra(ops, g, HeunReading::Rescaled);
  if (group == "heun_casimir" || group == "heun_casimir_rescaled") {
    const auto reading =
        group == "heun_casimir" ? HeunReading::Standard : HeunReading::Rescaled;
    auto res = casimir_heun(ops, g, reading);
    if (res.value) obs["value"] = complex_json(Field::to_complex(*res.value));
    return res.reports;
  }
  if (group == "dft_commute") return check_commuting_with_dft(ops, g);
  if (group == "unitary") return check_unitary_equivalence(ops, g);
  if (group == "circulant") return circulant_similarity(ops, g);
  throw Error(ErrorCode::InvalidArgument, "unknown relation id '" + group + "'");
}

}  // namespace

VerifyRecord run_relation_group(const std::string& group, int n, ScalarBackend::Mode mode,
                                std::uint64_t seed) {
  require_dimension(n);
  VerifyRecord rec;
  rec.relation_id = group;
  rec.n = n;
  const auto start = std::chrono::steady_clock::now();
  if (mode == ScalarBackend::Mode::Exact) {
    rec.backend = ScalarBackend::exact(field_order_for(n));
    rec.components = run_group<ExactField>(group, n, seed, rec.observations);
  } else {
    rec.backend = ScalarBackend::floating();
    rec.components = run_group<FloatField>(group, n, seed, rec.observations);
  }
  rec.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rec.verdict = aggregate_verdict(rec.components);
  for (const auto& c : rec.components)
    rec.residual_inf_norm = std::max(rec.residual_inf_norm, c.residual_inf_norm);
  return rec;
}

unsigned max_threads_from_env() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("VERIFIER_MAX_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) hw = std::min(hw, static_cast<unsigned>(v));
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return hw;
}

std::vector<VerifyRecord> run_verify(const RunConfig& config) {
  if (config.n_values.empty()) throw Error(ErrorCode::InvalidArgument, "no dimensions given");
  std::vector<int> dims = config.n_values;
  for (int n : dims) require_dimension(n);
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  const auto groups = resolve_relations(config.relations);

  struct Item {
    int n;
    std::string group;
    ScalarBackend::Mode mode;
  };
  std::vector<Item> items;
  for (int n : dims) {
    for (const auto& g : groups) {
      if (config.backend != BackendChoice::Float) items.push_back({n, g, ScalarBackend::Mode::Exact});
      if (config.backend != BackendChoice::Exact) items.push_back({n, g, ScalarBackend::Mode::Float});
    }
  }

  std::vector<VerifyRecord> records(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        records[i] = run_relation_group(items[i].group, items[i].n, items[i].mode, config.seed);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(max_threads_from_env(), std::max<std::size_t>(1, items.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

int verify_exit_code(const std::vector<VerifyRecord>& records) {
  return std::any_of(records.begin(), records.end(),
                     [](const VerifyRecord& r) { return r.verdict == Verdict::Failed; })
             ? 1
             : 0;
}

}  // namespace dftalg
