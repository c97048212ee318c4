#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

struct Run {
  int exit_code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DFTVERIFY_PATH) + " " + args + " 2>&1";
  Run r{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(Cli, VerifyAw3BothBackends) {
  const auto r = run("verify --n 5 --relations aw3 --backend both --no-timestamps");
  EXPECT_EQ(r.exit_code, 0);
  const auto recs = lines(r.out);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0]["verdict"], "ExactZero");
  EXPECT_EQ(recs[1]["verdict"], "ResidualNorm");
}

TEST(Cli, SmallNIsUsageError) {
  const auto r = run("verify --n 2");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.out.find("N must be"), std::string::npos);
}

TEST(Cli, UnknownRelationAndMissingFlag) {
  EXPECT_EQ(run("verify --n 5 --relations nope").exit_code, 2);
  EXPECT_EQ(run("verify").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
}

TEST(Cli, SweepOfHoldingGroupsPasses) {
  const auto r = run(
      "verify --n 3..9 --backend exact --no-timestamps --relations "
      "intertwining,cubic,jacobi,casimir_q1,aw,aw3,so3q_cyclic,aw3_casimir,heun_rescaled,"
      "heun_casimir_rescaled,dft_commute,unitary,circulant");
  EXPECT_EQ(r.exit_code, 0);
  for (const auto& rec : lines(r.out)) {
    if (rec["n"] == 4 && (rec["relation_id"] == "cubic" || rec["relation_id"] == "heun_casimir_rescaled"))
      EXPECT_EQ(rec["verdict"], "Degenerate");
    else if (rec["n"] != 4)
      EXPECT_EQ(rec["verdict"], "ExactZero") << rec.dump();
  }
}

TEST(Cli, SweepAllFailsOnlyKnownGroups) {
  const auto r = run("verify --n 3..9 --relations all --backend exact --no-timestamps");
  EXPECT_EQ(r.exit_code, 1);
  for (const auto& rec : lines(r.out)) {
    const std::string id = rec["relation_id"];
    if (rec["verdict"] == "Failed")
      EXPECT_TRUE(id == "so3q" || id == "heun" || id == "heun_casimir") << id;
  }
}

TEST(Cli, DeterministicOutput) {
  const std::string args = "verify --n 3..6 --relations intertwining,aw --no-timestamps";
  EXPECT_EQ(run(args + " --seed 9").out, run(args + " --seed 9").out);
  EXPECT_NE(run(args + " --seed 9").out, run(args + " --seed 10").out);
}

TEST(Cli, TextFormat) {
  const auto r = run("verify --n 5 --relations cubic --backend exact --format text");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("ExactZero"), std::string::npos);
}

TEST(Cli, OutputFileAndIoError) {
  const auto path = std::filesystem::temp_directory_path() / "dftverify_cli_test.jsonl";
  EXPECT_EQ(run("verify --n 3 --relations aw --out " + path.string()).exit_code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(lines(ss.str()).size(), 2u);
  std::filesystem::remove(path);
  EXPECT_EQ(run("verify --n 3 --relations aw --out /nonexistent/dir/x.jsonl").exit_code, 3);
}

TEST(Cli, DumpPositionN3) {
  const auto r = run("dump --n 3 X --backend float");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 3);
  EXPECT_NEAR(j["entries"][0][0]["re"].get<double>(), 0.0, 1e-15);
  EXPECT_NEAR(j["entries"][1][1]["re"].get<double>(), std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(j["entries"][2][2]["re"].get<double>(), -std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(j["entries"][0][1]["re"].get<double>(), 0.0, 1e-15);
}

TEST(Cli, DumpCirculantN4Exact) {
  const auto r = run("dump --n 4 Ztilde");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (int k = 0; k < 4; ++k) {
    for (int l = 0; l < 4; ++l) {
      const auto& coeffs = j["entries"][k][l]["coeffs"];
      const bool adjacent = (k - l + 4) % 4 == 1 || (l - k + 4) % 4 == 1;
      EXPECT_EQ(coeffs[0], adjacent ? "1" : "0");
      for (std::size_t c = 1; c < coeffs.size(); ++c) EXPECT_EQ(coeffs[c], "0");
      EXPECT_EQ(j["entries"][k][l]["order"], 8);
    }
  }
}

TEST(Cli, DumpReflectionN5) {
  const auto j = nlohmann::json::parse(run("dump --n 5 Pd --backend float").out);
  for (int k = 0; k < 5; ++k)
    for (int l = 0; l < 5; ++l)
      EXPECT_EQ(j["entries"][k][l]["re"].get<double>(), k == (5 - l) % 5 ? 1.0 : 0.0);
}

TEST(Cli, DumpUnknownOperator) { EXPECT_EQ(run("dump --n 5 Q").exit_code, 2); }

TEST(Cli, SpectraRankAndIsospectral) {
  const auto a = lines(run("spectra --n 5 --ops A").out);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0]["rank"], 4);
  const auto xy = lines(run("spectra --n 6 --ops X,Y").out);
  ASSERT_EQ(xy.size(), 2u);
  const auto ex = xy[0]["eigenvalues"].get<std::vector<double>>();
  const auto ey = xy[1]["eigenvalues"].get<std::vector<double>>();
  ASSERT_EQ(ex.size(), ey.size());
  for (std::size_t i = 0; i < ex.size(); ++i) EXPECT_NEAR(ex[i], ey[i], 1e-10);
}

TEST(Cli, SpectraZMultiplicities) {
  const auto z = lines(run("spectra --n 8 --ops Z").out);
  std::vector<int> mult;
  for (const auto& c : z.at(0)["multiplicities"]) mult.push_back(c["multiplicity"]);
  EXPECT_EQ(mult, (std::vector<int>{1, 2, 2, 2, 1}));
}

TEST(Cli, SpectraLadder) {
  const auto l = lines(run("spectra --n 5 --ops ladder").out);
  EXPECT_EQ(l.at(0)["kind"], "ladder");
  EXPECT_EQ(l.at(0)["all_symmetric"], true);
}
