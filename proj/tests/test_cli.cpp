#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "certificate_json.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "liaisonlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = liaisonlab::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("liaisonlab-test-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, liaisonlab::kExitUsage);
  EXPECT_EQ(run({"verify"}).code, liaisonlab::kExitUsage);
  EXPECT_EQ(run({"verify", "--pipeline", "h10-8", "--prime", "15"}).code, liaisonlab::kExitUsage);
  EXPECT_EQ(run({"verify", "--pipeline", "h10-8", "--prime", "1048583"}).code, liaisonlab::kExitUsage);
  EXPECT_EQ(run({"verify", "--pipeline", "h99"}).code, liaisonlab::kExitUsage);
  EXPECT_EQ(run({"verify", "--pipeline", "m10-n", "--format", "xml"}).code, liaisonlab::kExitUsage);
  EXPECT_EQ(run({"verify", "--pipeline", "m10-n", "--points", "6"}).code, liaisonlab::kExitUsage);
  EXPECT_EQ(run({"gb", "/nonexistent/file.ideal"}).code, liaisonlab::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, liaisonlab::kExitUsage);

  auto dir = scratch("bad");
  std::ofstream(dir / "bad.ideal") << "ring p=101 blocks=x:2:(1,0) y:3:(0,1)\nx0 + y0\n";
  EXPECT_EQ(run({"gb", (dir / "bad.ideal").string()}).code, liaisonlab::kExitUsage);
  std::ofstream(dir / "junk.ideal") << "ring p=101 blocks=x:2:(1,0) y:3:(0,1)\nx0 +* y0\n";
  EXPECT_EQ(run({"gb", (dir / "junk.ideal").string()}).code, liaisonlab::kExitUsage);
}

TEST(Cli, GroebnerAndInvariants) {
  auto dir = scratch("gb");
  std::ofstream(dir / "cubic.ideal") << "# twisted cubic\nring p=10007 blocks=z:4:(1)\nz0*z2 - z1^2\nz1*z3 - z2^2\n"
                                        "z0*z3 - z1*z2\n";
  auto gb = run({"gb", (dir / "cubic.ideal").string()});
  ASSERT_EQ(gb.code, 0) << gb.err;
  auto j = ordered_json::parse(gb.out);
  EXPECT_EQ(j["groebner_basis"].size(), 3u);
  EXPECT_EQ(j["ring"]["p"], 10007);

  auto inv = run({"invariants", (dir / "cubic.ideal").string(), "--h0", "2", "--h0", "3"});
  ASSERT_EQ(inv.code, 0) << inv.err;
  auto k = ordered_json::parse(inv.out);
  EXPECT_EQ(k["dimension"], 1);
  EXPECT_EQ(k["degree"], ordered_json::array({3}));
  EXPECT_EQ(k["genus"], 0);
  EXPECT_EQ(k["h0"]["2"], 3);
  EXPECT_EQ(k["h0"]["3"], 10);
}

TEST(Cli, VerifyWritesACertificate) {
  auto dir = scratch("verify");
  const auto out = (dir / "cert.json").string();
  auto r = run({"verify", "--pipeline", "m10-n", "--points", "0", "--seed", "7", "-o", out});
  ASSERT_EQ(r.code, liaisonlab::kExitPass) << r.err;
  auto j = ordered_json::parse(read_file(out));
  std::vector<std::string> keys;
  for (const auto& [key, v] : j.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"schema", "pipeline", "prime", "seed", "attempt", "effective_seed", "pass",
                                            "metadata", "checks", "resamples", "aborted", "timings"}));
  EXPECT_EQ(j["schema"], liaisonlab::kCertificateSchema);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["prime"], 10007);
  for (const auto& c : j["checks"]) {
    std::vector<std::string> ck;
    for (const auto& [key, v] : c.items()) ck.push_back(key);
    EXPECT_EQ(ck, (std::vector<std::string>{"name", "relation", "expected", "computed", "pass"}));
  }

  auto text = run({"verify", "--pipeline", "m10-n", "--points", "0", "--seed", "7", "--format", "text"});
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("PASS"), std::string::npos);
}

TEST(Cli, GoldenCertificate) {
  auto r = run({"verify", "--pipeline", "m10-n", "--points", "2", "--seed", "5", "--prime", "1009"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto got = liaisonlab::without_timings(ordered_json::parse(r.out));
  const fs::path golden = fs::path(LIAISON_GOLDEN_DIR) / "m10_n-p1009-s5-n2.json";
  ASSERT_TRUE(fs::exists(golden)) << golden;
  EXPECT_EQ(got.dump(2) + "\n", read_file(golden));
}

TEST(Cli, ConstructDumpsReimport) {
  auto dir = scratch("construct");
  const auto dump = (dir / "ideals").string();
  const auto choices = (dir / "choices.txt").string();
  auto r = run({"construct", "--pipeline", "m10-n", "--points", "0", "--seed", "7", "--dump-ideals", dump,
                "--dump-choices", choices, "-o", (dir / "cert.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* f : {"C0.ideal", "Cp.ideal", "Cpp.ideal"}) EXPECT_TRUE(fs::exists(fs::path(dump) / f)) << f;
  EXPECT_FALSE(read_file(choices).empty());

  auto c1 = run({"invariants", (fs::path(dump) / "Cp.ideal").string(), "--h0", "3,3"});
  ASSERT_EQ(c1.code, 0) << c1.err;
  auto j1 = ordered_json::parse(c1.out);
  EXPECT_EQ(j1["degree"], ordered_json::array({3, 9}));
  EXPECT_EQ(j1["genus"], 4);
  EXPECT_EQ(j1["h0"]["3,3"], 7);

  auto c2 = run({"invariants", (fs::path(dump) / "Cpp.ideal").string(), "--saturate"});
  ASSERT_EQ(c2.code, 0) << c2.err;
  auto j2 = ordered_json::parse(c2.out);
  EXPECT_EQ(j2["degree"], ordered_json::array({6, 9}));
  EXPECT_EQ(j2["genus"], 10);
}
