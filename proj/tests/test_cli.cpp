#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "lievol/cli.hpp"

namespace lievol {
namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "lievol");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

TEST(Cli, ResolveGroup) {
  EXPECT_EQ(cli::resolve_group("su", 3).rank, 2);
  EXPECT_EQ(cli::resolve_group("Spin", 7).family, Family::B);
  EXPECT_EQ(cli::resolve_group("Spin", 10).family, Family::D);
  EXPECT_EQ(cli::resolve_group("Sp", 4).family, Family::C);
  EXPECT_EQ(cli::resolve_group("D", 4).rank, 4);
  EXPECT_EQ(cli::resolve_group("e8", std::nullopt).family, Family::E8);
  EXPECT_THROW(cli::resolve_group("SU", std::nullopt), cli::UsageError);
  EXPECT_THROW(cli::resolve_group("X", 3), cli::UsageError);
  EXPECT_THROW(cli::resolve_group("D", 3), InvalidTypeError);
}

TEST(Cli, VolumeJsonRoundTrip) {
  const CliRun r = invoke({"volume", "--group", "SU", "--n", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = ordered_json::parse(r.out);
  EXPECT_EQ(dump(j) + "\n", r.out);
  EXPECT_EQ(j["group"], "SU_2");
  EXPECT_EQ(j["dim"], 3);
  const double expected = 32 * std::numbers::sqrt2 * std::numbers::pi * std::numbers::pi;
  EXPECT_NEAR(j["volume"].get<double>(), expected, 1e-9 * expected);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"group", "dim", "phi_universal", "phi_kp",
                                            "log_volume", "volume", "route_discrepancy",
                                            "converged", "notes"}));
}

TEST(Cli, VolumeOutputIsReproducible) {
  const CliRun a = invoke({"volume", "--group", "E8", "--format", "json"});
  const CliRun b = invoke({"volume", "--group", "E8", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VolumeCsvAndText) {
  const CliRun csv = invoke({"volume", "--group", "Spin", "--n", "7", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  const auto l = lines(csv.out);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], kVolumeCsvHeader);
  EXPECT_EQ(l[1].rfind("Spin_7,21,", 0), 0u);
  const CliRun text = invoke({"volume", "--group", "g2"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("G2 (G2)"), std::string::npos);
}

TEST(Cli, InvalidTypeIsUsageError) {
  EXPECT_EQ(invoke({"volume", "--group", "D", "--n", "3"}).code, 2);
  EXPECT_EQ(invoke({"volume", "--group", "Spin", "--n", "6"}).code, 2);
  EXPECT_EQ(invoke({"volume", "--group", "B", "--n", "1"}).code, 2);
  EXPECT_EQ(invoke({"volume", "--group", "SU"}).code, 2);
  EXPECT_EQ(invoke({"volume"}).code, 2);
  EXPECT_EQ(invoke({"bogus"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const CliRun r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("phi"), std::string::npos);
}

TEST(Cli, PhiDivergenceGate) {
  const CliRun a = invoke({"phi", "--alpha", "1", "--beta", "1", "--gamma", "1"});
  EXPECT_EQ(a.code, 3);
  EXPECT_NE(a.err.find("diverges"), std::string::npos);
  EXPECT_EQ(invoke({"phi", "--alpha", "0", "--beta", "1", "--gamma", "1"}).code, 3);
  EXPECT_EQ(invoke({"phi", "--alpha", "1", "--beta", "-1", "--gamma", "0"}).code, 2);
  EXPECT_EQ(invoke({"phi", "--alpha", "-2", "--beta", "0", "--gamma", "3"}).code, 2);
  EXPECT_EQ(invoke({"phi", "--alpha", "-2", "--beta", "2", "--gamma", "1"}).code, 0);
}

TEST(Cli, PhiJson) {
  const CliRun r = invoke({"phi", "--alpha=-2", "--beta", "2", "--gamma", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = ordered_json::parse(r.out);
  EXPECT_EQ(dump(j) + "\n", r.out);
  EXPECT_NEAR(j["phi"].get<double>(), std::log(std::numbers::pi / 2), 1e-12);
  EXPECT_EQ(j["converged"], true);
}

TEST(Cli, ScanCsv) {
  const CliRun r = invoke({"scan", "--from", "0.5", "--to", "3", "--step", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 7u);
  EXPECT_EQ(l[0], "gamma,phi,reference,residual");
  for (std::size_t i = 1; i < l.size(); ++i) {
    const auto residual = std::stod(l[i].substr(l[i].rfind(',') + 1));
    EXPECT_LE(std::fabs(residual), 1e-7) << l[i];
  }
  EXPECT_EQ(l[4].rfind("2,0.45158270528945", 0), 0u);
}

TEST(Cli, ScanMarksDivergentAndUndefinedRows) {
  const CliRun r = invoke({"scan", "--alpha", "1", "--beta", "1", "--from", "-1", "--to", "1",
                        "--step", "1"});
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 4u);
  // (1, 1, -1) is off the divergence set and has no unitary reference.
  EXPECT_EQ(l[1].rfind("-1,", 0), 0u);
  EXPECT_NE(l[1], "-1,,,");
  EXPECT_EQ(l[1].substr(l[1].size() - 2), ",,");
  EXPECT_EQ(l[2], "0,,,diverges");
  EXPECT_EQ(l[3], "1,,,diverges");
}

TEST(Cli, ScanRejectsBadRange) {
  EXPECT_EQ(invoke({"scan", "--from", "1", "--to", "2", "--step", "0"}).code, 2);
  EXPECT_EQ(invoke({"scan", "--from", "3", "--to", "2", "--step", "1"}).code, 2);
  EXPECT_EQ(invoke({"scan", "--from", "3"}).code, 2);
}

TEST(Cli, TableHasExactRationalRows) {
  const CliRun r = invoke({"table", "--max-rank", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  EXPECT_EQ(l[0], "group,cartan,alpha,beta,gamma,t,dim,phi_universal,phi_kp,log_volume");
  bool found_su4 = false;
  for (const auto& row : l)
    if (row.rfind("SU_4,A3,-2,2,4,4,15,", 0) == 0) found_su4 = true;
  EXPECT_TRUE(found_su4);
  const CliRun j = invoke({"table", "--max-rank", "2", "--format", "json"});
  const auto rows = ordered_json::parse(j.out);
  bool found_g2 = false;
  for (const auto& row : rows)
    if (row["group"] == "G2") {
      found_g2 = true;
      EXPECT_EQ(row["beta"], "10/3");
      EXPECT_EQ(row["gamma"], "8/3");
    }
  EXPECT_TRUE(found_g2);
}

TEST(Cli, CheckPasses) {
  const CliRun r = invoke({"check", "--max-rank", "4"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ToleranceFromEnvironment) {
  ::setenv("LIEVOL_TOL", "not-a-number", 1);
  EXPECT_EQ(invoke({"phi", "--alpha", "-2", "--beta", "2", "--gamma", "3"}).code, 2);
  ::setenv("LIEVOL_TOL", "1e-6", 1);
  EXPECT_EQ(invoke({"phi", "--alpha", "-2", "--beta", "2", "--gamma", "3"}).code, 0);
  ::unsetenv("LIEVOL_TOL");
}

TEST(Cli, RejectsUnknownFormat) {
  EXPECT_EQ(invoke({"volume", "--group", "G2", "--format", "xml"}).code, 2);
}

}  // namespace
}  // namespace lievol
