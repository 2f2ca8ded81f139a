#include "cli.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace packing {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell and returns stdout plus the exit status.
std::pair<int, std::string> run_binary(const std::string& args) {
  std::string command = std::string(PACKING_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string output;
  char buffer[256];
  while (std::fgets(buffer, sizeof buffer, pipe)) output += buffer;
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("packing_cli_test_" + name);
}

TEST(Cli, Pairing) {
  EXPECT_EQ(run_cli({"pack2", "--variant", "c1", "1", "1"}).out, "4\n");
  EXPECT_EQ(run_cli({"pack2", "--variant", "c2", "1", "0"}).out, "2\n");
  EXPECT_EQ(run_cli({"unpack2", "--variant", "c1", "4"}).out, "1 1\n");
  EXPECT_EQ(run_cli({"pack", "--dim", "3", "0", "0", "1"}).out, "2\n");
  EXPECT_EQ(run_cli({"unpack", "--dim", "3", "2"}).out, "0 0 1\n");
  EXPECT_EQ(run_cli({"pack", "--dim", "3", "1", "0"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"pack2", "--variant", "c1", "-1", "0"}).code, cli::kUsage);
}

TEST(Cli, Classify) {
  Outcome c1 = run_cli({"classify", "1", "1", "1", "1", "3", "0"});
  EXPECT_EQ(c1.code, cli::kOk);
  EXPECT_EQ(c1.out.substr(0, c1.out.find('\n')), "IsCantor1");

  Outcome gap = run_cli({"classify", "1", "0", "1", "1", "1", "0"});
  EXPECT_EQ(gap.code, cli::kRefuted);
  EXPECT_EQ(gap.out.substr(0, gap.out.find('\n')), "ModularGap");

  Outcome linear = run_cli({"classify", "0", "0", "0", "1", "3", "0"});
  EXPECT_EQ(linear.code, cli::kUsage);
  EXPECT_EQ(run_cli({"classify", "1", "1"}).code, cli::kUsage);
}

TEST(Cli, VerifyCertRoundTrip) {
  Outcome doc = run_cli({"classify", "1", "0", "1", "1", "1", "0", "--json"});
  ASSERT_EQ(doc.code, cli::kRefuted);
  auto path = temp_file("modular.json");
  std::ofstream(path) << doc.out;
  Outcome ok = run_cli({"verify-cert", path.string()});
  EXPECT_EQ(ok.code, cli::kOk);
  EXPECT_EQ(ok.out, "valid\n");

  Json mutated = Json::parse(doc.out);
  mutated["certificate"]["s"] = (Int(parse_int(mutated["certificate"]["s"].get<std::string>())) + 1).str();
  std::ofstream(path) << mutated.dump();
  Outcome bad = run_cli({"verify-cert", path.string()});
  EXPECT_EQ(bad.code, cli::kRefuted);
  EXPECT_EQ(bad.out, "invalid\n");

  std::ofstream(path) << "{ not json";
  EXPECT_EQ(run_cli({"verify-cert", path.string()}).code, cli::kRefuted);
  std::filesystem::remove(path);
  EXPECT_EQ(run_cli({"verify-cert", path.string()}).code, cli::kUsage);
}

TEST(Cli, RefuteLinear) {
  Outcome out = run_cli({"refute-linear", "--ell", "0", "2", "3", "0", "--json"});
  ASSERT_EQ(out.code, cli::kOk);
  Json doc = Json::parse(out.out);
  EXPECT_EQ(doc["certificate"]["type"], "collision");
  EXPECT_TRUE(verify_document(doc));
  EXPECT_EQ(run_cli({"refute-linear", "-4", "7"}).code, cli::kUsage);
}

TEST(Cli, SectorAndNumberTheory) {
  EXPECT_EQ(run_cli({"sector", "pack", "--r", "1", "--s", "2", "4", "2"}).out, "5\n");
  EXPECT_EQ(run_cli({"sector", "unpack", "--r", "1", "--s", "2", "5"}).out, "4 2\n");
  EXPECT_EQ(run_cli({"sector", "pack", "--r", "1", "--s", "2", "1", "1"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"sector", "verify", "--r", "2", "--s", "3", "--points", "500"}).code, cli::kOk);
  EXPECT_EQ(run_cli({"sector", "pack", "--r", "3", "--s", "5", "1", "0"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"nonresidue-prime", "2", "8"}).out, "13\n");
  EXPECT_EQ(run_cli({"nonresidue-prime", "49", "1"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"region-counts", "2"}).out, "100 675 160 207 8\ntotal 1150\n");
}

TEST(Cli, SearchQuadratics) {
  Outcome out = run_cli({"search-quadratics", "--coeff-bound", "3", "--box", "40", "--values", "200"});
  ASSERT_EQ(out.code, cli::kOk);
  EXPECT_EQ(std::count(out.out.begin(), out.out.end(), '\n'), 2);
  EXPECT_NE(out.out.find("IsCantor1"), std::string::npos);
  EXPECT_NE(out.out.find("IsCantor2"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kOk);
}

TEST(CliBinary, PairingRoundTripOnRandomPoints) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t x = rng() % 1000000, y = rng() % 1000000;
    const char* variant = i % 2 ? "c2" : "c1";
    auto [code, packed] = run_binary(std::string("pack2 --variant ") + variant + " " + std::to_string(x) + " " +
                                     std::to_string(y));
    ASSERT_EQ(code, 0);
    packed.pop_back();
    auto [code2, point] = run_binary(std::string("unpack2 --variant ") + variant + " " + packed);
    ASSERT_EQ(code2, 0);
    ASSERT_EQ(point, std::to_string(x) + " " + std::to_string(y) + "\n");
  }
}

TEST(CliBinary, VerifyCertExitCodes) {
  auto [code, doc] = run_binary("classify 1 1 1 1 1 0 --json");
  ASSERT_EQ(code, 1);
  auto path = temp_file("collision.json");
  std::ofstream(path) << doc;
  EXPECT_EQ(run_binary("verify-cert " + path.string()), (std::pair<int, std::string>{0, "valid\n"}));
  Json mutated = Json::parse(doc);
  mutated["certificate"]["value"] = "7";
  std::ofstream(path) << mutated.dump();
  EXPECT_EQ(run_binary("verify-cert " + path.string()), (std::pair<int, std::string>{1, "invalid\n"}));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace packing
