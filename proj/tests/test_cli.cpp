#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mipoly/cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "mipoly");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = mipoly::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ConstructEmptySet) {
  const CliRun r = run({"construct", "--nmax", "0"});
  ASSERT_EQ(r.code, mipoly::kExitPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["polynomials"][0]["coeffs"], nlohmann::json::parse(R"([["1","1"]])"));
}

TEST(Cli, ConstructGoldenDegree) {
  const CliRun r = run({"construct", "--indices", "2", "--nmax", "1"});
  ASSERT_EQ(r.code, mipoly::kExitPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["polynomials"][0]["coeffs"].size(), 3u);
  EXPECT_EQ(j["polynomials"][1]["coeffs"].size(), 4u);
  EXPECT_EQ(j["normalization"], "normalized");
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--indices", "2"}).code, mipoly::kExitPass);
  EXPECT_EQ(run({"verify", "--indices", "2", "--b", "1/4"}).code, mipoly::kExitInvalidInput);
  EXPECT_EQ(run({"verify", "--indices", "2", "--suite", "reflection"}).code, mipoly::kExitPass);
  EXPECT_EQ(run({"verify", "--q", "3/2"}).code, mipoly::kExitInvalidInput);
  EXPECT_EQ(run({"verify", "--q", "x"}).code, mipoly::kExitInvalidInput);
  EXPECT_EQ(run({"verify", "--family", "laguerre", "--b", "1/8"}).code,
            mipoly::kExitInvalidInput);
  EXPECT_EQ(run({"verify", "--indices", "2,2"}).code, mipoly::kExitInvalidInput);
}

TEST(Cli, VerifyIsDeterministic) {
  const CliRun a = run({"verify", "--indices", "1,2", "--family", "laguerre", "--nmax", "2"});
  const CliRun b = run({"verify", "--indices", "1,2", "--family", "laguerre", "--nmax", "2"});
  EXPECT_EQ(a.code, mipoly::kExitPass);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ZerosCsv) {
  const CliRun r = run({"zeros", "--indices", "2", "--n", "3"});
  ASSERT_EQ(r.code, mipoly::kExitPass) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n,index,re,im,physical");
  int rows = 0, physical = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (line.size() >= 4 && line.substr(line.size() - 4) == "true") ++physical;
  }
  EXPECT_EQ(rows, 5);
  EXPECT_EQ(physical, 3);
}

TEST(Cli, TableCsv) {
  const CliRun r = run({"table", "--indices", "2", "--nmax", "3"});
  ASSERT_EQ(r.code, mipoly::kExitPass) << r.err;
  EXPECT_EQ(r.out.rfind("n,ratio,exact,exact_decimal,deviation,bound,status", 0), 0u);
}

TEST(Cli, TypeOneIsRaw) {
  const CliRun r = run({"construct", "--type", "1", "--family", "laguerre", "--a", "1/40", "--indices",
                     "1", "--nmax", "1"});
  ASSERT_EQ(r.code, mipoly::kExitPass) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["normalization"], "raw");
}
