#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ricci3_cli.hpp"

using ricci3::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ricci3");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ricci3::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) out.push_back(Json::parse(line));
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("ricci3_test_" + name);
}

}  // namespace

TEST(Cli, SolveSymmetric) {
  const auto r = cli({"solve", "so3", "--T", "1,1,1", "--format", "json-lines"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rec = lines(r.out).at(0);
  EXPECT_EQ(rec["kind"], "Unique");
  EXPECT_NEAR(rec["solutions"][0]["c"].get<double>(), 2.0, 1e-12);
  EXPECT_TRUE(rec["certified"].get<bool>());
}

TEST(Cli, TextFormatUsesSeventeenDigits) {
  const auto r = cli({"solve", "so3", "--T", "1,1,1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("kind: Unique"), std::string::npos);
  EXPECT_NE(r.out.find("0.79370052598409979"), std::string::npos);
}

TEST(Cli, ClassifyNegativeComponents) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"classify", "sl2", "--T", "-3,-2,1"},
        std::vector<std::string>{"classify", "sl2", "--T=-3,-2,1"},
        std::vector<std::string>{"classify", "--group", "SL2", "--T", "-3,-2,1"}}) {
    const auto r = cli(args);
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("case_label: SL2 case (iv)"), std::string::npos) << r.out;
  }
}

TEST(Cli, NoSolutionIsSuccess) {
  const auto r = cli({"solve", "r3", "--T", "0,0,1", "--format", "json-lines"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).at(0)["kind"], "NoSolution");
}

TEST(Cli, MalformedInputNamesField) {
  auto r = cli({"solve", "so3", "--T", "1,2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("T:"), std::string::npos);
  r = cli({"solve", "so4", "--T", "1,1,1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("group"), std::string::npos);
  r = cli({"certify", "so3", "--T", "1,1,1", "--v", "1,-1,1", "--c", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("v:"), std::string::npos);
  r = cli({"solve", "so3"});
  EXPECT_EQ(r.code, 2);
  r = cli({"bogus"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, MalformedInputFileNamesField) {
  const auto path = temp_file("bad.jsonl");
  std::ofstream(path) << "{\"group\":\"so3\",\"T\":[1,\"x\",1]}\n";
  const auto r = cli({"solve", "--input", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("T:"), std::string::npos) << r.err;
  std::ofstream(path) << "not json\n";
  EXPECT_EQ(cli({"solve", "--input", path.string()}).code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, CertifyFailureExitCode) {
  const auto ok = cli({"certify", "h3", "--T", "1,-1,-1", "--v", "1,1,1", "--c", "2"});
  EXPECT_EQ(ok.code, 0);
  const auto bad = cli({"certify", "h3", "--T", "1,-1,-1", "--v", "1,1,1", "--c", "3"});
  EXPECT_EQ(bad.code, 3);
}

TEST(Cli, SolveRecordRoundTripsThroughCertify) {
  const auto path = temp_file("roundtrip.jsonl");
  {
    std::ofstream f(path);
    for (const char* t : {"10,-1,-1", "1,1,1", "4,0,0"})
      f << cli({"solve", "so3", "--T", t, "--format", "json-lines"}).out;
    f << cli({"solve", "sl2", "--T", "-3,-2,1", "--format", "json-lines"}).out;
    f << cli({"solve", "e11", "--T", "0,0,-2", "--format", "json-lines"}).out;
  }
  const auto r = cli({"certify", "--input", path.string(), "--format", "json-lines"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto recs = lines(r.out);
  EXPECT_EQ(recs.size(), 6u);
  for (const auto& rec : recs) EXPECT_TRUE(rec["pass"].get<bool>());
  std::filesystem::remove(path);
}

TEST(Cli, SweepGridAndSummary) {
  const auto r = cli({"sweep", "so3", "--T1", "10", "--T2-range", "-2..0", "--T3-range", "-2..0", "--steps", "10",
                      "--format", "json-lines", "--threads", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = lines(r.out);
  ASSERT_EQ(recs.size(), 101u);
  EXPECT_EQ(recs[0]["T"][1].get<double>(), -2.0);
  EXPECT_NEAR(recs[99]["T"][2].get<double>(), -0.2, 1e-15);
  const auto& summary = recs.back();
  EXPECT_EQ(summary["command"], "sweep-summary");
  EXPECT_EQ(summary["points"], 100);
  std::size_t total = 0;
  for (const auto& [label, kinds] : summary["histogram"].items())
    for (const auto& [kind, count] : kinds.items()) total += count.get<std::size_t>();
  EXPECT_EQ(total, 100u);
}

TEST(Cli, SweepIsDeterministicAcrossThreadCounts) {
  const std::vector<std::string> base{"sweep", "sl2", "--T1", "-1", "--T2-range", "-2..2", "--T3-range", "-2..2",
                                      "--steps", "20", "--format", "json-lines"};
  auto one = base, four = base;
  one.insert(one.end(), {"--threads", "1"});
  four.insert(four.end(), {"--threads", "4"});
  EXPECT_EQ(cli(one).out, cli(four).out);
}

TEST(Cli, SweepNeedsRange) {
  EXPECT_EQ(cli({"sweep", "so3", "--T1", "1", "--T2", "1", "--T3", "1"}).code, 2);
  EXPECT_EQ(cli({"sweep", "so3", "--T1", "1", "--T2", "1", "--T3-range", "1..0", "--steps", "3"}).code, 2);
}

TEST(Cli, OracleRicci) {
  const auto r = cli({"oracle-ricci", "e11", "--v", "1,1,1", "--format", "json-lines"});
  ASSERT_EQ(r.code, 0);
  const auto rec = lines(r.out).at(0);
  EXPECT_NEAR(rec["ricci"][2][2].get<double>(), -8.0, 1e-14);
  EXPECT_NEAR(rec["ricci"][0][0].get<double>(), 0.0, 1e-14);
  const auto full = cli({"oracle-ricci", "so3", "--g", "1,0,0,1,0,1", "--format", "json-lines"});
  EXPECT_NEAR(lines(full.out).at(0)["ricci"][1][1].get<double>(), 2.0, 1e-14);
  EXPECT_EQ(cli({"oracle-ricci", "so3", "--g", "1,2,0,1,0,1"}).code, 2);
}

TEST(Cli, FullTensorOnSo3) {
  const auto r = cli({"solve", "so3", "--T-full", "2,1,0,2,0,5", "--format", "json-lines"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rec = lines(r.out).at(0);
  EXPECT_NEAR(rec["T"][0].get<double>(), 5.0, 1e-14);
  EXPECT_NEAR(rec["T"][2].get<double>(), 1.0, 1e-14);
  EXPECT_EQ(cli({"solve", "sl2", "--T-full", "2,1,0,2,0,5"}).code, 2);
}

TEST(Cli, ProbeIsDeterministic) {
  const std::vector<std::string> args{"probe", "so3", "--T", "2,2,1", "--samples", "8", "--seed", "5"};
  const auto a = cli(args), b = cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, WritesToOutFile) {
  const auto path = temp_file("out.txt");
  const auto r = cli({"solve", "h3", "--T", "1,-1,-1", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(text.find("kind: Unique"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, BinaryOutputIsByteIdentical) {
  const std::string cmd = std::string(RICCI3_TOOL_PATH) + " solve so3 --T 10,-1,-1 --format json-lines";
  auto capture = [&] {
    std::string text;
    FILE* pipe = popen(cmd.c_str(), "r");
    char buf[256];
    while (pipe && fgets(buf, sizeof buf, pipe)) text += buf;
    EXPECT_EQ(pipe ? pclose(pipe) : -1, 0);
    return text;
  };
  const std::string a = capture();
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, capture());
}
