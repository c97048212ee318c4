// dftverify: verification sweeps, matrix dumps and spectra for the DFT
// operator family. Output is JSON lines unless --format text.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dftalg/error.hpp"
#include "dftalg/json_io.hpp"
#include "dftalg/operators.hpp"
#include "dftalg/runner.hpp"
#include "dftalg/spectral.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::out | std::ios::trunc);
    if (!file_) throw IoError("cannot open '" + path + "' for writing");
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }
  void line(const std::string& s) {
    out() << s << '\n';
    if (!out()) throw IoError("write failed");
  }
  void flush() {
    out().flush();
    if (!out()) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
};

int cmd_verify(const std::string& n_text, const std::string& relations, const std::string& backend,
               const std::string& out_path, const std::string& format, std::uint64_t seed,
               bool no_timestamps) {
  dftalg::RunConfig cfg;
  cfg.n_values = dftalg::parse_n_values(n_text);
  cfg.relations = split_list(relations);
  dftalg::resolve_relations(cfg.relations);
  cfg.backend = dftalg::parse_backend(backend);
  cfg.format = format == "text" ? dftalg::OutputFormat::Text : dftalg::OutputFormat::Json;
  cfg.seed = seed;
  cfg.timestamps = !no_timestamps;
  cfg.output_path = out_path;

  Sink sink(cfg.output_path);
  const auto records = dftalg::run_verify(cfg);
  for (const auto& rec : records) {
    if (cfg.format == dftalg::OutputFormat::Text)
      sink.line(dftalg::to_text(rec));
    else
      sink.line(dftalg::to_json(rec, cfg.timestamps).dump());
  }
  sink.flush();
  return dftalg::verify_exit_code(records);
}

int cmd_dump(const std::string& n_text, const std::string& op, const std::string& backend,
             const std::string& out_path) {
  const auto ns = dftalg::parse_n_values(n_text);
  if (ns.size() != 1) throw dftalg::Error(dftalg::ErrorCode::InvalidArgument, "dump takes a single N");
  if (!dftalg::is_operator_id(op))
    throw dftalg::Error(dftalg::ErrorCode::InvalidArgument, "unknown operator id '" + op + "'");
  const auto choice = dftalg::parse_backend(backend);
  if (choice == dftalg::BackendChoice::Both)
    throw dftalg::Error(dftalg::ErrorCode::InvalidArgument, "dump needs --backend exact or float");
  nlohmann::json j;
  if (choice == dftalg::BackendChoice::Exact)
    j = dftalg::matrix_to_json(dftalg::named_operator(dftalg::ExactOperators(ns[0]), op));
  else
    j = dftalg::matrix_to_json(dftalg::named_operator(dftalg::FloatOperators(ns[0]), op));
  j["operator_id"] = op;
  Sink sink(out_path);
  sink.line(j.dump());
  sink.flush();
  return 0;
}

nlohmann::json spectrum_json(int n, const std::string& op) {
  if (op == "ladder") return dftalg::to_json(dftalg::ladder_hierarchy(n));
  if (op == "overlap") return dftalg::to_json(dftalg::eigenbasis_epsilon(n));
  if (!dftalg::is_operator_id(op))
    throw dftalg::Error(dftalg::ErrorCode::InvalidArgument, "unknown operator id '" + op + "'");
  const auto m = dftalg::named_operator(dftalg::FloatOperators(n), op);
  if (dftalg::inf_norm(m - m.adjoint()) <= dftalg::kHermitianTolerance)
    return dftalg::to_json(dftalg::hermitian_spectrum(m, op));
  return dftalg::to_json(dftalg::rank_report(dftalg::named_operator(dftalg::ExactOperators(n), op), op));
}

int cmd_spectra(const std::string& n_text, const std::string& ops, const std::string& out_path) {
  const auto ns = dftalg::parse_n_values(n_text);
  const auto ids = split_list(ops);
  if (ids.empty()) throw dftalg::Error(dftalg::ErrorCode::InvalidArgument, "no operators given");
  for (const auto& id : ids)
    if (id != "ladder" && id != "overlap" && !dftalg::is_operator_id(id))
      throw dftalg::Error(dftalg::ErrorCode::InvalidArgument, "unknown operator id '" + id + "'");
  Sink sink(out_path);
  for (int n : ns)
    for (const auto& id : ids) sink.line(spectrum_json(n, id).dump());
  sink.flush();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify the algebraic identities of the DFT operator family"};
  app.require_subcommand(1);

  std::string n_text, relations = "all", backend = "both", out_path, format = "json";
  std::string ops, op;
  std::uint64_t seed = 1;
  bool no_timestamps = false;

  auto* verify = app.add_subcommand("verify", "Run relation checks over a range of N");
  verify->add_option("--n", n_text, "Dimensions, e.g. 3..9,12")->required();
  verify->add_option("--relations", relations, "Comma separated relation ids or 'all'");
  verify->add_option("--backend", backend, "exact, float or both");
  verify->add_option("--out", out_path, "Output file (default stdout)");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--seed", seed, "Seed for random intertwiner parameters");
  verify->add_flag("--no-timestamps", no_timestamps, "Omit elapsed times");

  std::string dump_backend = "exact";
  auto* dump = app.add_subcommand("dump", "Write one operator matrix as JSON");
  dump->add_option("--n", n_text, "Dimension")->required();
  dump->add_option("operator", op, "phi, A, Adag, X, Y, C, Z, Ztilde, S, W, Pd, K0, K1, K2")->required();
  dump->add_option("--backend", dump_backend, "exact or float");
  dump->add_option("--out", out_path, "Output file (default stdout)");

  auto* spectra = app.add_subcommand("spectra", "Spectra, ranks and ladder reports");
  spectra->add_option("--n", n_text, "Dimensions")->required();
  spectra->add_option("--ops", ops, "Comma separated operator ids, 'ladder' or 'overlap'")->required();
  spectra->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(n_text, relations, backend, out_path, format, seed, no_timestamps);
    if (*dump) return cmd_dump(n_text, op, dump_backend, out_path);
    return cmd_spectra(n_text, ops, out_path);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const dftalg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == dftalg::ErrorCode::InternalError ? 1 : kExitUsage;
  }
}
