#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lexconn/cli.hpp"
#include "lexconn/graph_io.hpp"
#include "lexconn/serialization.hpp"

namespace lexconn {
namespace {

namespace fs = std::filesystem;

const std::string kData = LEXCONN_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lexconn");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lexconn_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

  fs::path dir_;
};

TEST_F(CliTest, ComputeStar) {
  auto r = run({"compute", kData + "/star3.el", "--invariants", "k,k1"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, "{\"k\":1,\"k1\":\"infinity\"}\n");
}

TEST_F(CliTest, ComputeSuperOnC4) {
  auto r = run({"compute", kData + "/c4.g6", "-i", "super"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, "{\"super\":true}\n");
}

TEST_F(CliTest, ComputeAllFormats) {
  auto json = run({"compute", kData + "/k2_plus_k1.el", "-i", "k,k1,delta,v0"});
  EXPECT_EQ(json.out, "{\"k\":0,\"k1\":\"infinity\",\"delta\":0,\"v0\":[2]}\n");
  auto csv = run({"--format", "csv", "compute", kData + "/k2_plus_k1.el", "-i", "k,k1,delta,v0"});
  EXPECT_EQ(csv.out, "k,k1,delta,v0\n0,infinity,0,2\n");
  auto plain = run({"compute", kData + "/k2_plus_k1.el", "-i", "k,k1,delta,v0", "--format", "plain"});
  EXPECT_EQ(plain.out, "k 0\nk1 infinity\ndelta 0\nv0 2\n");
}

TEST_F(CliTest, ComputeWithWitnessesAndOverride) {
  write("g.txt", "Cl\n");
  auto r = run({"--format-in", "g6", "compute", path("g.txt"), "-i", "k,k1", "--witness"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["k_cut"].size(), 2u);
  EXPECT_EQ(j["k1"], "infinity");
}

TEST_F(CliTest, ComputeErrors) {
  EXPECT_EQ(run({"compute", kData + "/missing.g6"}).code, cli::kExitInputError);
  write("bad.el", "3 1\n0 7\n");
  auto bad = run({"compute", path("bad.el")});
  EXPECT_EQ(bad.code, cli::kExitInputError);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"compute", kData + "/c4.g6", "-i", "girth"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"compute"}).code, cli::kExitUsage);
  write("empty.el", "0 0\n");
  EXPECT_EQ(run({"compute", path("empty.el"), "-i", "k"}).code, cli::kExitInputError);
}

TEST_F(CliTest, ProductK2K2) {
  auto r = run({"--quiet", "product", kData + "/k2.g6", kData + "/k2.g6", path("k4.g6")});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(r.err.empty());
  EXPECT_EQ(read_graph_file(path("k4.g6"), GraphFormat::graph6), complete_graph(4));
}

TEST_F(CliTest, ProductReport) {
  auto r = run({"product", kData + "/c4.g6", kData + "/k2.g6", path("p.g6"), "--report", "--oracle"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, "{\"n\":8,\"m_edges\":20,\"kappa_formula\":4,\"kappa_oracle\":4}\n");
}

TEST_F(CliTest, ProductThenComputeCounterexample) {
  auto p = run({"product", kData + "/counterexample_g1.el", kData + "/k2_plus_k1.el", path("p.g6")});
  ASSERT_EQ(p.code, cli::kExitOk) << p.err;
  auto c = run({"compute", path("p.g6"), "-i", "k,super"});
  EXPECT_EQ(c.out, "{\"k\":3,\"super\":false}\n");
}

TEST_F(CliTest, ProductEmptyFactor) {
  write("empty.el", "0 0\n");
  EXPECT_EQ(run({"product", path("empty.el"), kData + "/k2.g6", path("o.g6")}).code,
            cli::kExitInputError);
}

TEST_F(CliTest, VerifyThm21) {
  auto r = run({"verify", "--theorem", "thm21", "--n1-max", "4", "--n2-max", "2", "--mode",
                "exhaustive"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["theorem_id"], "thm21");
  EXPECT_TRUE(j["discrepancies"].empty());
  EXPECT_TRUE(j.contains("wall_time_ms"));
}

TEST_F(CliTest, VerifyReadingEchoAndExitCode) {
  auto r = run({"--quiet", "verify", "--theorem", "cor24", "--reading", "all_cuts", "--n1-max", "4",
                "--n2-max", "2", "--no-timing"});
  EXPECT_EQ(r.code, cli::kExitDiscrepancies);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["reading"], "all_cuts");
  EXPECT_FALSE(j.contains("wall_time_ms"));
  EXPECT_EQ(run({"--quiet", "verify", "--theorem", "thm23", "--reading", "all_cuts", "--n1-max",
                 "4", "--n2-max", "2"})
                .out.find("\"reading\": \"all_cuts\"") != std::string::npos,
            true);
}

TEST_F(CliTest, VerifyUsageErrors) {
  EXPECT_EQ(run({"verify", "--theorem", "bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "thm21", "--n1-max", "9"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "thm21", "--reading", "some"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "thm21", "--mode", "random", "--p", "2"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--theorem", "thm21", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
}

TEST_F(CliTest, VerifyRandomEmbedsSeed) {
  auto r = run({"--quiet", "verify", "--theorem", "thm21", "--mode", "random", "--samples", "20",
                "--seed", "9", "--p", "0.5", "--n1-max", "5", "--n2-max", "3"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["seed"], 9);
  EXPECT_EQ(j["p"], "1/2");
}

TEST_F(CliTest, VerifyCsv) {
  auto r = run({"--format", "csv", "--quiet", "verify", "--theorem", "thm21", "--n1-max", "3",
                "--n2-max", "1", "--no-timing"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "theorem_id,reading,mode,n1_max,n2_max,instances_checked,skipped,agreements,"
            "agreement_rate,discrepancies");
  const auto row = r.out.substr(r.out.find('\n') + 1);
  EXPECT_EQ(row.substr(row.rfind(',') + 1), "0\n");
}

// Certificates embed graph6 strings; feeding them back through compute must
// reproduce the stored factor invariants.
TEST_F(CliTest, CertificateGraphsReplayThroughCompute) {
  auto r = run({"--quiet", "verify", "--theorem", "cor24", "--n1-max", "4", "--n2-max", "2"});
  auto certs = Json::parse(r.out)["discrepancies"];
  ASSERT_FALSE(certs.empty());
  for (const auto& c : certs) {
    for (const char* side : {"g1", "g2"}) {
      write("f.g6", c[side].get<std::string>() + "\n");
      auto out = run({"compute", path("f.g6")});
      ASSERT_EQ(out.code, cli::kExitOk) << out.err;
      EXPECT_EQ(Json::parse(out.out), c[std::string(side) + "_invariants"]);
    }
  }
}

}  // namespace
}  // namespace lexconn
