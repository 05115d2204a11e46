#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cutree/cli.hpp"

namespace cutree {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Cli, VerifyTreesOfSizeSix) {
  const Result r = run({"verify", "--class", "trees", "--seq", "phi", "--m", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK 48/48\n");
}

TEST(Cli, VerifyRangeAndJobs) {
  const Result one = run({"verify", "--class", "trees", "--m-max", "5"});
  const Result four = run({"verify", "--class", "trees", "--m-max", "5", "--jobs", "4"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_EQ(lines(one.out), (std::vector<std::string>{"m=1 OK 1/1", "m=2 OK 2/2", "m=3 OK 4/4", "m=4 OK 9/9", "m=5 OK 20/20"}));
}

TEST(Cli, VerifySpiders) {
  const Result r = run({"verify", "--class", "spiders", "--m", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK 7/7\n");
  // From m = 6 on, a three-legged guest with one long leg overflows every host leg.
  const Result six = run({"verify", "--class", "spiders", "--m", "6"});
  EXPECT_EQ(six.code, 1);
  EXPECT_EQ(lines(six.out).front(), "COUNTEREXAMPLE guest " + canonical_code(new_spider({1, 1, 4})).text + " host " +
                                        canonical_code(universal_spider(6)).text);
  EXPECT_EQ(lines(six.out).back(), "FAIL 10/11");
}

TEST(Cli, BoundsRow) {
  const Result r = run({"bounds", "--m", "10", "--format", "tsv"});
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "m\tlower_bound\tspider_size\tu_phi\tu_g\t(2m)^c");
  EXPECT_EQ(rows[1].rfind("10\t22\t22\t36\t", 0), 0u) << rows[1];
}

TEST(Cli, BoundsJson) {
  const Result r = run({"bounds", "--m", "3", "--m-max", "4", "--format", "json", "--quoted-delta"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["m"], 4);
  EXPECT_EQ(j[1]["lower_bound"], 6);
  EXPECT_EQ(j[1]["u_g"], 9);
  EXPECT_TRUE(j[1].contains("delta_phi"));
}

TEST(Cli, CheckIdenticalTrees) {
  const auto dir = std::filesystem::temp_directory_path() / "cutree_cli_test";
  std::filesystem::create_directories(dir);
  const auto file = (dir / "t.code").string();
  std::ofstream(file) << "((())(()()))\n";
  const Result r = run({"check", "--guest", file, "--host", file, "--rooted"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).front(), "CONTAINED (witness: 0 edges)");
}

TEST(Check, WitnessLineParsesBack) {
  const std::string host = "((()())(()))";
  const Result r = run({"check", "--guest", "(()())", "--host", host, "--rooted"});
  ASSERT_EQ(r.code, 0);
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 2u);
  const RootedTree h = canonicalize(parse_code(host));
  const ContractionWitness w = parse_witness(h, out[1]);
  EXPECT_EQ(canonical_code(apply_witness(h, w)).text, "(()())");
}

TEST(Check, UnrootedNamesGuestRoot) {
  const Result r = run({"check", "--guest", "((()))", "--host", "(()()())", "--oracle"});
  EXPECT_EQ(r.code, 0);
  const auto out = lines(r.out);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0], "CONTAINED (witness: 1 edges)");
  EXPECT_EQ(out[1], "guest-root (()())");
  EXPECT_NE(r.err.find("oracle: contained"), std::string::npos);
}

TEST(Check, NotContained) {
  const Result r = run({"check", "--guest", "(((())))", "--host", "(()()())", "--rooted", "--oracle"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "NOT CONTAINED\n");
  EXPECT_NE(r.err.find("oracle: not contained"), std::string::npos);
}

TEST(Cli, VerifyFailureReplaysThroughCheck) {
  const Result r = run({"verify", "--class", "brushes", "--seq", "phi", "--m", "7"});
  ASSERT_EQ(r.code, 1);
  int counterexamples = 0;
  for (const std::string& line : lines(r.out)) {
    if (line.rfind("COUNTEREXAMPLE guest ", 0) != 0) continue;
    ++counterexamples;
    std::istringstream fields(line);
    std::string word, guest, host;
    fields >> word >> word >> guest >> word >> host;
    const Result c = run({"check", "--guest", guest, "--host", host, "--rooted"});
    EXPECT_EQ(c.code, 1);
    EXPECT_EQ(c.out, "NOT CONTAINED\n");
  }
  EXPECT_GT(counterexamples, 0);
  EXPECT_EQ(lines(r.out).back().rfind("FAIL ", 0), 0u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--m", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--m", "3", "--class", "shrubs"}).code, 2);
  EXPECT_EQ(run({"build", "--m", "3", "--seq", "custom"}).code, 2);
  EXPECT_EQ(run({"check", "--guest", "(()", "--host", "()"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--m", "13"}).code, 3);
  EXPECT_EQ(run({"enumerate", "--m", "5", "--enum-cap", "17"}).code, 2);
  EXPECT_EQ(run({"check", "--guest", "()", "--host", "((((((((((((()))))))))))))", "--oracle"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VersionOnDiagnosticsOnly) {
  const Result r = run({"bounds", "--m", "4"});
  EXPECT_NE(r.err.find(cli::kVersion), std::string::npos);
  EXPECT_EQ(r.out.find(cli::kVersion), std::string::npos);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands{
      {"build", "--m", "6", "--format", "dot"},
      {"build", "--m", "5", "--seq", "g", "--format", "json"},
      {"verify", "--class", "brushes", "--m", "8", "--jobs", "3"},
      {"bounds", "--m", "1", "--m-max", "40"},
      {"exponent", "--m-lo", "64", "--m-hi", "256"},
      {"enumerate", "--class", "spiders", "--m", "6", "--format", "tsv"},
  };
  for (const auto& cmd : commands) {
    const Result a = run(cmd);
    const Result b = run(cmd);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, BuildReportsPadding) {
  const Result r = run({"build", "--m", "3", "--seq", "g", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["m"], 3);
  EXPECT_EQ(j["built_m"], 4);
  EXPECT_EQ(j["edges"], 9);
  EXPECT_NE(r.err.find("padded to 4"), std::string::npos);
}

TEST(Cli, BuildObjects) {
  EXPECT_EQ(run({"build", "--m", "2"}).out, canonical_code(ramify(phi_sequence(), 2)).text + "\n");
  EXPECT_EQ(run({"build", "--m", "4", "--object", "spider"}).out, canonical_code(new_spider({1, 1, 2, 2})).text + "\n");
  EXPECT_EQ(run({"build", "--m", "4", "--object", "comb", "--seq", "g"}).out,
            canonical_code(build_comb(g_sequence(), 4)).text + "\n");
}

TEST(Cli, CustomStemFile) {
  const auto dir = std::filesystem::temp_directory_path() / "cutree_cli_test";
  std::filesystem::create_directories(dir);
  const auto file = (dir / "phi.stem").string();
  {
    std::ofstream out(file);
    for (int p = 1; p <= 6; ++p) out << format_stem_function(phi_function(p)) << "\n";
  }
  const Result custom = run({"build", "--m", "6", "--seq", "custom", "--stem-file", file});
  EXPECT_EQ(custom.code, 0);
  EXPECT_EQ(custom.out, run({"build", "--m", "6"}).out);
  EXPECT_EQ(run({"build", "--m", "7", "--seq", "custom", "--stem-file", file}).code, 2);
}

TEST(Cli, Enumerate) {
  const Result trees = run({"enumerate", "--m", "3"});
  EXPECT_EQ(lines(trees.out).size(), 4u);
  const Result spiders = run({"enumerate", "--class", "spiders", "--m", "4", "--format", "tsv"});
  EXPECT_EQ(lines(spiders.out), (std::vector<std::string>{"1,1,1,1", "1,1,2", "1,3", "2,2", "4"}));
  const Result json = run({"enumerate", "--class", "brushes", "--m", "2", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(json.out).size(), 2u);
}

TEST(Cli, Exponent) {
  const Result r = run({"exponent", "--m-lo", "64", "--m-hi", "65"});
  EXPECT_EQ(r.code, 0);
  const double expected = std::log(static_cast<double>(size_recursion(phi_sequence(), 64))) / std::log(64.0);
  EXPECT_NEAR(std::stod(r.out), expected, 1e-9);
}

}  // namespace
}  // namespace cutree
