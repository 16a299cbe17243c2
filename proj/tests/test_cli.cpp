#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "swell/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = swell::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST(Cli, Table1Csv) {
  const auto r = run({"table1", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 8u);
  EXPECT_EQ(l[0], "well,a,v0,alpha,qb,k_star,k_tau,k_p,k_sigma,kappa,modulus,ell_ratio,phi_at_kstar");
  EXPECT_EQ(l[5].rfind("V,", 0), 0u);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, ReportWellI) {
  const auto r = run({"report", "--a", "2.4", "--v0", "10", "--kmax", "3.5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_FALSE(doc.empty());
  EXPECT_NEAR(doc[0]["k_sigma"].get<double>(), 0.9950, 5e-5);
  EXPECT_EQ(doc[0]["n"].get<int>(), 1);
}

TEST(Cli, ScanJsonUnitaryLimit) {
  const auto r = run({"scan", "--a", "2.4", "--v0", "10", "--kmin", "0.01", "--kmax", "3.5", "--n", "8192",
                      "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 8192u);
  double best = 1e9, sigma = 0;
  for (const auto& s : doc) {
    const double d = std::abs(s["k"].get<double>() - 0.99501);
    if (d < best) {
      best = d;
      sigma = s["sigma_phi"].get<double>();
    }
  }
  EXPECT_NEAR(sigma, 4.0, 1e-3);
  for (const char* key : {"k", "tau", "ell", "p_trap", "sigma", "sigma_theta", "sigma_phi", "theta_mod_pi",
                          "phi_mod_pi"}) {
    EXPECT_TRUE(doc[0].contains(key)) << key;
  }
}

TEST(Cli, ScanCsvHeaderAndMarkers) {
  const auto r = run({"scan", "--alpha", "10.733", "--a", "2.4", "--kmin", "0.01", "--kmax", "2", "--n", "64",
                      "--markers"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  EXPECT_EQ(l[0], "k,tau,ell,p_trap,sigma,sigma_theta,sigma_phi,theta_mod_pi,phi_mod_pi,marker");
  EXPECT_NE(r.out.find(",l_peak"), std::string::npos);
  EXPECT_NE(r.out.find(",pole_re"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"poles", "--a", "2.4", "--v0", "10", "--re-max", "3"};
  const auto first = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, run(args).out);
}

TEST(Cli, OtherSubcommands) {
  auto r = run({"bound-states", "--a", "12", "--v0", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 18u);
  r = run({"sweep", "--alpha-min", "39", "--alpha-max", "39.2", "--step", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 4u);
  r = run({"scaling", "--a", "2.4", "--v0", "10", "--factor", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(",true"), std::string::npos);
}

TEST(Cli, WritesOutputFile) {
  const std::string path = ::testing::TempDir() + "swell_cli_out.csv";
  const auto r = run({"bound-states", "--a", "2.4", "--v0", "10", "--output", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "n,kappa,energy");
  std::remove(path.c_str());
}

TEST(Cli, UsageErrorsNameTheFlag) {
  struct Case {
    std::vector<std::string> args;
    const char* flag;
  };
  const std::vector<Case> cases = {
      {{"scan", "--a", "2.4", "--kmin", "0.1", "--kmax", "1"}, "--v0"},
      {{"scan", "--a", "2.4", "--v0", "10", "--kmin", "2", "--kmax", "1"}, "--kmax"},
      {{"scan", "--a", "2.4", "--v0", "10", "--kmin", "1e-9", "--kmax", "1"}, "--kmin"},
      {{"scan", "--a", "2.4", "--v0", "10", "--kmax", "1", "--format", "xml"}, "--format"},
      {{"scan", "--v0", "10", "--kmax", "1"}, "--a"},
      {{"scan", "--a", "2.4", "--v0", "10", "--alpha", "3", "--kmax", "1"}, "--alpha"},
      {{"scan", "--a", "-2.4", "--v0", "10", "--kmax", "1"}, "--a"},
      {{"scan", "--a", "2.4", "--v0", "0", "--kmax", "1"}, "--v0"},
      {{"sweep", "--alpha-min", "5", "--alpha-max", "4"}, "--alpha-max"},
      {{"scaling", "--a", "2.4", "--v0", "10", "--factor", "0"}, "--factor"},
  };
  for (const auto& c : cases) {
    const auto r = run(c.args);
    EXPECT_EQ(r.code, 2) << c.flag;
    EXPECT_NE(r.err.find(c.flag), std::string::npos) << r.err;
  }
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}
