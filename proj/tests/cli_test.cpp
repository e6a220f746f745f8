#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lehmerlab/cli.hpp"

using namespace lehmerlab::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* file) { return std::string(LEHMERLAB_TEST_DATA) + "/" + file; }

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, kExitBadArguments);
  EXPECT_EQ(run_cli({"nonsense"}).code, kExitBadArguments);
  EXPECT_EQ(run_cli({"lehmer-scan"}).code, kExitBadArguments);
  EXPECT_EQ(run_cli({"lehmer-scan", "--max", "1"}).code, kExitBadArguments);
  EXPECT_EQ(run_cli({"lehmer-scan", "--max", "100", "--workers", "0"}).code, kExitBadArguments);
  EXPECT_EQ(run_cli({"lehmer-scan", "--max", "100", "--format", "xml"}).code, kExitBadArguments);
  EXPECT_EQ(run_cli({"aut"}).code, kExitBadArguments);
  EXPECT_EQ(run_cli({"aut", "--abelian", "4^1"}).code, kExitBadArguments);
  EXPECT_EQ(run_cli({"aut", "--table", data("missing.txt")}).code, kExitBadArguments);
  EXPECT_EQ(run_cli({"aut", "--table", data("bad_token.txt")}).code, kExitInvalidTable);
  EXPECT_EQ(run_cli({"aut", "--table", data("broken_assoc.txt")}).code, kExitInvalidTable);
  EXPECT_EQ(run_cli({"phi-g", "--group", "cyclic:1000"}).code, kExitCapExceeded);
  EXPECT_EQ(run_cli({"phi-g", "--group", "cyclic:1"}).code, kExitBadArguments);
  EXPECT_EQ(run_cli({"verify-theorem1", "--max-order", "1"}).code, kExitBadArguments);
  EXPECT_EQ(run_cli({"verify-theorem1", "--max-order", "600"}).code, kExitBadArguments);
  EXPECT_EQ(run_cli({"relation2", "--max-order", "8"}).code, kExitOk);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, ScanText) {
  const auto r = run_cli({"lehmer-scan", "--max", "1000", "--carmichael"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("candidates: 0"), std::string::npos);
  EXPECT_NE(r.out.find("  561\n"), std::string::npos);
}

TEST(Cli, ScanJson) {
  const auto r = run_cli({"lehmer-scan", "--max", "1000", "--carmichael", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["kind"], "lehmer-scan");
  EXPECT_EQ(j["summary"]["candidates"], 0);
  ASSERT_EQ(j["records"].size(), 1u);
  EXPECT_EQ(j["records"][0]["n"], 561);
  EXPECT_FALSE(j.contains("timing"));
  const auto timed = nlohmann::json::parse(
      run_cli({"lehmer-scan", "--max", "1000", "--timing", "--format", "json"}).out);
  EXPECT_TRUE(timed.contains("timing"));
}

TEST(Cli, AutOutputs) {
  const auto r = run_cli({"aut", "--abelian", "2^1,2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["aut_order"], "8");
  EXPECT_EQ(j["summary"]["group"], "Z_2 x Z_4");

  const auto cross = run_cli({"aut", "--abelian", "2^1,1", "--cross-check"});
  EXPECT_EQ(cross.code, kExitOk);
  EXPECT_NE(cross.out.find("agree"), std::string::npos);

  const auto big = nlohmann::json::parse(run_cli({"aut", "--abelian", "2^1,1,1,1,1,1,1,1,1,1,1,1", "--format", "json"}).out);
  EXPECT_TRUE(big["summary"]["aut_order"].is_string());

  const auto table = run_cli({"aut", "--table", data("klein.txt"), "--cross-check", "--format", "json"});
  EXPECT_EQ(table.code, kExitOk);
  const auto tj = nlohmann::json::parse(table.out);
  EXPECT_EQ(tj["summary"]["aut_order"], "6");
  EXPECT_EQ(tj["summary"]["cross_check"], "agree");

  const auto s3 = nlohmann::json::parse(run_cli({"aut", "--table", data("s3.txt"), "--format", "json"}).out);
  EXPECT_EQ(s3["summary"]["aut_order"], "6");
}

TEST(Cli, PhiG) {
  const auto r = run_cli({"phi-g", "--group", "heisenberg:3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("exp 3"), std::string::npos);
  EXPECT_NE(r.out.find("phi 26"), std::string::npos);
  const auto s3 = nlohmann::json::parse(run_cli({"phi-g", "--table", data("s3.txt"), "--format", "json"}).out);
  EXPECT_EQ(s3["kind"], "phi-g");
}

TEST(Cli, VerifyAndRelation2Json) {
  const auto v = run_cli({"verify-theorem1", "--max-order", "16", "--format", "json"});
  ASSERT_EQ(v.code, kExitOk);
  const auto vj = nlohmann::json::parse(v.out);
  EXPECT_EQ(vj["kind"], "verify-theorem1");
  EXPECT_FALSE(vj["records"].empty());
  const auto r = run_cli({"relation2", "--max-order", "16", "--format", "json", "--extra-table", data("s3.txt")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["kind"], "relation2");
}

TEST(Cli, DeterministicAcrossWorkersAndSegments) {
  std::string reference;
  for (const char* seg : {"4096", "1048576"}) {
    for (const char* workers : {"1", "4"}) {
      const auto r = run_cli({"lehmer-scan", "--max", "2000000", "--carmichael", "--format", "json", "--segment", seg,
                              "--workers", workers});
      ASSERT_EQ(r.code, kExitOk);
      if (reference.empty()) reference = r.out;
      EXPECT_EQ(r.out, reference) << seg << " " << workers;
    }
  }
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "lehmerlab_cli_test_out.json";
  std::filesystem::remove(path);
  const auto r = run_cli({"phi-g", "--group", "sym:3", "--format", "json", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(nlohmann::json::parse(ss.str())["summary"]["condition2"]["status"], "undefined_zero_phi");
  std::filesystem::remove(path);
  EXPECT_EQ(run_cli({"phi-g", "--group", "sym:3", "--out", "/nonexistent_dir/x.txt"}).code, kExitBadArguments);
}
