#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "planar_turan/cli.hpp"
#include "planar_turan/serialization.hpp"

using namespace planar_turan;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "planar_turan_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, Bounds) {
  const CliRun r = run({"bounds", "--h", "1", "--k", "5", "--n", "12"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("upper 30"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("lower 30"), std::string::npos) << r.out;
  const CliRun j = run({"bounds", "--h", "2", "--k", "5", "--n", "12", "--json"});
  EXPECT_EQ(json::parse(j.out)["upper_floor"], 34);
}

TEST(Cli, Witness) {
  const CliRun r = run({"witness", "--h", "2", "--k", "5", "--n", "24"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["m"], 60);
  EXPECT_TRUE(verify_certificate_json(j).ok);
}

TEST(Cli, WitnessToFileThenCheck) {
  const auto path = scratch("w.json");
  const CliRun w = run({"witness", "--h", "1", "--k", "4", "--n", "21", "--out", path.string()});
  ASSERT_EQ(w.code, kExitOk) << w.err;
  EXPECT_NE(w.out.find("m=45"), std::string::npos);
  const CliRun c = run({"check", "--h", "1", "--k", "4", "--in", path.string()});
  EXPECT_EQ(c.code, kExitOk) << c.out << c.err;
  EXPECT_NE(c.out.find("certificate: ok"), std::string::npos);

  std::ifstream f(path);
  json j = json::parse(f);
  j["m"] = 46;
  const CliRun bad = run({"check", "--h", "1", "--k", "4", "--in", "-"}, j.dump());
  EXPECT_EQ(bad.code, kExitFailure);
}

TEST(Cli, CheckGraph6Lines) {
  const CliRun clean = run({"check", "--h", "1", "--k", "2", "--in", "-"}, "Bw\nD~{\n");
  EXPECT_EQ(clean.code, kExitOk) << clean.err;
  EXPECT_NE(clean.out.find("planar=no"), std::string::npos);
  // K6 contains W_{1,2}
  const CliRun hit = run({"check", "--h", "1", "--k", "2", "--in", "-", "--json"}, "E~~w\n");
  EXPECT_EQ(hit.code, kExitContainsPattern);
  EXPECT_FALSE(json::parse(hit.out)["graphs"][0]["pattern_free"].get<bool>());
  const CliRun junk = run({"check", "--h", "1", "--k", "2", "--in", "-"}, "B!\n");
  EXPECT_EQ(junk.code, kExitRange);
  const CliRun missing = run({"check", "--h", "1", "--k", "2", "--in", "/nonexistent/in.g6"});
  EXPECT_EQ(missing.code, kExitNoInput);
}

TEST(Cli, ExactSearch) {
  const CliRun r = run({"ex-exact", "--h", "1", "--k", "2", "--n", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["search"]["value"], 9);
  EXPECT_EQ(j["m"], 9);
  EXPECT_TRUE(j["search"]["within_bound"].get<bool>());
  const CliRun d = run({"ex-exact", "--h", "1", "--k", "2", "--n", "5", "--engine", "descend", "--threads", "2"});
  EXPECT_EQ(json::parse(d.out)["search"]["value"], 9);
  EXPECT_EQ(run({"ex-exact", "--h", "1", "--k", "2", "--n", "5", "--engine", "bfs"}).code, kExitUsage);
  EXPECT_EQ(run({"ex-exact", "--h", "1", "--k", "2", "--n", "11"}).code, kExitRange);
}

TEST(Cli, VerifyLemmas) {
  const CliRun r = run({"verify-lemmas", "--h", "1", "--k", "3", "--samples", "200", "--seed", "3", "--json"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  const CliRun one = run({"verify-lemmas", "--h", "2", "--k", "5", "--samples", "100", "--lemma", "w25"});
  EXPECT_EQ(one.code, kExitOk) << one.out;
  EXPECT_EQ(run({"verify-lemmas", "--h", "2", "--k", "5", "--lemma", "nope"}).code, kExitUsage);
}

TEST(Cli, Gen) {
  const CliRun r = run({"gen", "--n", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 11);
  const CliRun p = run({"gen", "--n", "5", "--planar"});
  EXPECT_EQ(std::count(p.out.begin(), p.out.end(), '\n'), 33);
  const CliRun f = run({"gen", "--n", "6", "--planar", "--free", "1,2"});
  EXPECT_EQ(f.code, kExitOk);
  EXPECT_EQ(run({"gen", "--n", "6", "--free", "1"}).code, kExitUsage);
}

TEST(Cli, UsageAndRange) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bounds", "--h", "1", "--k", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"bounds", "--h", "3", "--k", "5", "--n", "10"}).code, kExitRange);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"--version"}).code, kExitOk);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"witness", "--h", "1", "--k", "2", "--n", "5", "--out", "/nonexistent/dir/x"}).code,
            kExitCantCreate);
}

TEST(Cli, OutputIsDeterministic) {
  setenv("SOURCE_DATE_EPOCH", "0", 1);
  const auto a = run({"witness", "--h", "1", "--k", "3", "--n", "18"});
  const auto b = run({"witness", "--h", "1", "--k", "3", "--n", "18"});
  EXPECT_EQ(a.out, b.out);
  const auto s1 = run({"verify-lemmas", "--h", "1", "--k", "3", "--samples", "150", "--threads", "1"});
  const auto s3 = run({"verify-lemmas", "--h", "1", "--k", "3", "--samples", "150", "--threads", "3"});
  EXPECT_EQ(s1.out, s3.out);
}
