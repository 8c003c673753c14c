#include <json.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + std::string(TWISTCERT_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json payload(const CliRun& r) { return nlohmann::json::parse(r.out).at("payload"); }

TEST(Cli, ThresholdText) {
  const CliRun r = run("threshold --k 4 --l 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("r_min       9"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("b(7,2)"), std::string::npos) << r.out;
}

TEST(Cli, ThresholdJson) {
  const CliRun r = run("threshold --k 3 --l 6 --format json");
  ASSERT_EQ(r.code, 0);
  const auto rec = nlohmann::json::parse(r.out);
  EXPECT_EQ(rec.at("schema_version"), "1");
  EXPECT_EQ(rec.at("payload").at("r_min"), 21);
  EXPECT_EQ(rec.at("payload").at("rule"), "max(arccos(q),4m+2)");
}

TEST(Cli, CertifyExitCodes) {
  const CliRun ok = run("certify --k 4 --l 2 --r 9 --format json");
  ASSERT_EQ(ok.code, 0);
  EXPECT_EQ(payload(ok).at("verdict"), "certified");
  EXPECT_NEAR(payload(ok).at("y").get<double>(), 2.0185043818487892527, 1e-12);

  EXPECT_EQ(run("certify --k 4 --l 2 --r 3").code, 2);
  EXPECT_EQ(run("certify --k 4 --l -2 --r 5").code, 2);
  EXPECT_EQ(run("certify --k 3 --l 3 --r 5").code, 1);  // odd * odd is not a knot here
  EXPECT_EQ(run("certify --k 4 --l 2 --r 1").code, 1);
  EXPECT_EQ(run("certify --k 4 --l 2").code, 1);
  EXPECT_EQ(run("bogus").code, 1);
}

TEST(Cli, PrecisionFromEnvironment) {
  const CliRun r = run("certify --k 2 --l 2 --r 7 --format json");
  ASSERT_EQ(r.code, 0);
  const CliRun wide = run("certify --k 2 --l 2 --r 7 --format json", "env TWISTCERT_PRECISION=256 ");
  ASSERT_EQ(wide.code, 0);
  EXPECT_EQ(payload(wide).at("precision_bits"), 256);
  const CliRun flag = run("certify --k 2 --l 2 --r 7 --format json --precision 192", "env TWISTCERT_PRECISION=256 ");
  EXPECT_EQ(payload(flag).at("precision_bits"), 192);
  EXPECT_EQ(payload(r).at("precision_bits"), 128);
}

TEST(Cli, RileyVerify) {
  const CliRun r = run("riley --k 4 --l 2 --verify --format json");
  ASSERT_EQ(r.code, 0);
  const auto p = payload(r);
  EXPECT_EQ(p.at("phi"), "-y^3 + x^2*y^2 - y^2 - x^2*y + 2*y + 1");
  EXPECT_EQ(p.at("deg_y"), 3);
  EXPECT_EQ(p.at("oracle_match"), true);
  EXPECT_EQ(run("riley --k 1 --l 2").code, 1);
}

TEST(Cli, ScanWritesCsv) {
  const auto path = std::filesystem::temp_directory_path() / "twistcert_cli_scan.csv";
  const CliRun r = run("scan --k-range 4..4 --l-range -2..2 --r-max 9 --workers 2 --out " + path.string());
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string csv = ss.str();
  EXPECT_EQ(csv.rfind("k,l,p,m_schubert,r,", 0), 0u);
  EXPECT_NE(csv.find("\n4,2,7,2,9,"), std::string::npos);
  EXPECT_NE(csv.find("known_non_orderable"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(run("scan --k-range 5..4 --l-range 2..2").code, 1);
}

TEST(Cli, SelfTest) {
  const CliRun r = run("selftest --samples 50");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PASS oracle_equivalence"), std::string::npos);
}

}  // namespace
