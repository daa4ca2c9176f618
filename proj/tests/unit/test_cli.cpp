#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"

namespace weightsys::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_cache(const char* name) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove(p);
  return p;
}

TEST(Cli, EvalBases) {
  EXPECT_EQ(run_cli({"--no-cache", "eval", "(1,2,3)"}).out, "C_3\n");
  EXPECT_EQ(run_cli({"--no-cache", "eval", "(1,3,2)", "--basis", "standard"}).out, "1\n");
  EXPECT_EQ(run_cli({"--no-cache", "--engine", "so", "eval", "(1,2)"}).out, "C_2\n");
  EXPECT_EQ(run_cli({"--no-cache", "eval", "(1,2)", "--basis", "S"}).out, "-1/12*N^3 - S_1^2 + 1/12*N + 2*S_2\n");
}

TEST(Cli, EvalJson) {
  const Result r = run_cli({"--no-cache", "eval", "(1,3,2)", "--output", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"value\": \"-N*C_2 + C_1^2 + C_3\""), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"--no-cache", "eval", "(1,2"}).code, kUsage);
  EXPECT_EQ(run_cli({"--no-cache", "eval", "(1,2)", "--basis", "so-standard"}).code, kUsage);
  EXPECT_EQ(run_cli({"--no-cache", "--engine", "so", "eval", "(1,2)", "--basis", "S"}).code, kUsage);
  EXPECT_EQ(run_cli({"--no-cache", "frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"--no-cache", "dims", "--table", "5"}).code, kUsage);
}

TEST(Cli, BoundErrors) {
  EXPECT_EQ(run_cli({"--no-cache", "dims", "--table", "1", "--bound", "9"}).code, kBound);
  EXPECT_EQ(run_cli({"--no-cache", "average", "8"}).code, kBound);
  EXPECT_EQ(run_cli({"--no-cache", "oracle", "9", "--N", "2"}).code, kBound);
  EXPECT_EQ(run_cli({"--no-cache", "check-relations", "9"}).code, kBound);
}

TEST(Cli, ChecksAndTables) {
  EXPECT_EQ(run_cli({"--no-cache", "check-relations", "4"}).code, kOk);
  EXPECT_EQ(run_cli({"--no-cache", "--engine", "face-count", "check-relations", "4"}).code, kOk);
  EXPECT_EQ(run_cli({"--no-cache", "oracle", "3", "--N", "2", "--t", "2"}).code, kOk);
  const Result t = run_cli({"--no-cache", "dims", "--table", "2", "--output", "csv"});
  EXPECT_EQ(t.out, "m,dim,primitive\n2,1,1\n4,2,1\n6,4,2\n8,11,6\n");
  const Result a = run_cli({"--no-cache", "average", "2"});
  EXPECT_EQ(a.out, "-1/24*N^3 + 1/24*N + S_2\n");
}

TEST(Cli, ThreadsDoNotChangeOutput) {
  const Result one = run_cli({"--no-cache", "--threads", "1", "check-relations", "5", "--output", "json"});
  const Result four = run_cli({"--no-cache", "--threads", "4", "check-relations", "5", "--output", "json"});
  EXPECT_EQ(one.out, four.out);
}

TEST(Cli, CacheRoundTripIsByteIdentical) {
  const auto path = temp_cache("weightsys_test_cache.jsonl");
  const Result cold = run_cli({"--cache", path.string(), "eval", "(1,5,2,4)(3,6)"});
  ASSERT_TRUE(std::filesystem::exists(path));
  const auto size = std::filesystem::file_size(path);
  EXPECT_GT(size, 0U);
  const Result warm = run_cli({"--cache", path.string(), "eval", "(1,5,2,4)(3,6)"});
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_EQ(std::filesystem::file_size(path), size);
  std::filesystem::remove(path);
}

TEST(Cache, InvalidRecordsAreSkipped) {
  const auto path = temp_cache("weightsys_test_bad_cache.jsonl");
  {
    std::ofstream f(path);
    f << "not json\n";
    f << R"({"key":"[2,1,3]","value":[{"coeff":"7","monomial":{}}],"engine":"gl","version":"weightsys-cache-1"})" << '\n';
    f << R"({"key":"[2,3,1]","value":[{"coeff":"7","monomial":{}}],"engine":"gl","version":"old"})" << '\n';
  }
  // [2,1,3] is a rotation of the canonical [1,3,2]; its bogus value must not be used
  const Result r = run_cli({"--cache", path.string(), "eval", "(1,2)(3)"});
  EXPECT_EQ(r.out, "C_1*C_2\n");
  EXPECT_NE(r.err.find("skipped 3"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cache, EnvironmentVariableSuppliesPath) {
  const auto path = temp_cache("weightsys_test_env_cache.jsonl");
  setenv("WEIGHTSYS_CACHE", path.c_str(), 1);
  run_cli({"eval", "(1,3)(2,4)"});
  unsetenv("WEIGHTSYS_CACHE");
  EXPECT_TRUE(std::filesystem::exists(path));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace weightsys::cli
