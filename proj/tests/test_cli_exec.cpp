// End-to-end checks of the installed CLI binary: exit codes, output file
// determinism, and the machine-readable formats.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(NOGOSIG_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe) != nullptr) {
    output += buf.data();
  }
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("run: valid scenario exits zero and prints the verdict") {
  const RunResult r = run_cli("run --s 0 --p 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("NO_SIGNALLING") != std::string::npos);

  const RunResult sig = run_cli("run --s 0.70711 --p 0.70711");
  CHECK(sig.exit_code == 0);
  CHECK(sig.output.find("SIGNALLING") != std::string::npos);
  // exact value at these 5-digit inputs is 0.3535550000000001
  CHECK(sig.output.find("0.35356") != std::string::npos);
}

TEST_CASE("run: out-of-range overlap is a usage error") {
  const RunResult r = run_cli("run --s 1.5");
  CHECK(r.exit_code != 0);

  const RunResult r2 = run_cli("run --s 1.0");
  CHECK(r2.exit_code != 0);

  const RunResult r3 = run_cli("run --policy bogus");
  CHECK(r3.exit_code != 0);

  const RunResult r4 = run_cli("run --format bogus");
  CHECK(r4.exit_code != 0);
}

TEST_CASE("run: degenerate configuration still exits zero") {
  const RunResult r = run_cli("run --s 0.9999999999 --p 0.5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("DEGENERATE") != std::string::npos);
}

TEST_CASE("run: json output parses and carries the pinned fields") {
  const RunResult r = run_cli("run --s 0.5 --p 0.3 --format json");
  CHECK(r.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.output);
  for (const char* field : {"s", "p", "c", "policy", "gap_raw", "gap_norm",
                            "gram_defect_max", "verdict", "tool_version"}) {
    CHECK(j.contains(field));
  }
  CHECK(j["s"].get<double>() == 0.5);
  CHECK(j["verdict"] == "SIGNALLING");
}

TEST_CASE("sweep: csv grid with the exact header and row count") {
  const RunResult r =
      run_cli("sweep --s-grid 0:0.8:0.4 --p-grid 0:0.8:0.4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind(
            "s,p,c,policy,gap_raw,gap_norm,gram_defect_max,verdict\n", 0) ==
        0);
  std::size_t lines = 0;
  for (char ch : r.output) {
    if (ch == '\n') ++lines;
  }
  CHECK(lines == 10);
  CHECK(r.output.find("NO_SIGNALLING") != std::string::npos);
  CHECK(r.output.find("SIGNALLING") != std::string::npos);
}

TEST_CASE("sweep: malformed grid is a usage error") {
  CHECK(run_cli("sweep --s-grid 1:0:0.1").exit_code != 0);
  CHECK(run_cli("sweep --s-grid 0:0.5:0").exit_code != 0);
  CHECK(run_cli("sweep --s-grid 0:0.5").exit_code != 0);
}

TEST_CASE("identical invocations write byte-identical files") {
  const auto path1 = temp_file("nogosig_test_a.csv");
  const auto path2 = temp_file("nogosig_test_b.csv");
  const std::string flags =
      "sweep --s-grid 0:0.6:0.3 --p-grid 0:0.6:0.3 --format csv --out ";
  CHECK(run_cli(flags + path1.string()).exit_code == 0);
  CHECK(run_cli(flags + path2.string()).exit_code == 0);
  const std::string a = slurp(path1);
  const std::string b = slurp(path2);
  CHECK(!a.empty());
  CHECK(a == b);
  std::filesystem::remove(path1);
  std::filesystem::remove(path2);

  const auto path3 = temp_file("nogosig_test_c.json");
  const auto path4 = temp_file("nogosig_test_d.json");
  const std::string run_flags = "run --s 0.5 --p 0.5 --format json --out ";
  CHECK(run_cli(run_flags + path3.string()).exit_code == 0);
  CHECK(run_cli(run_flags + path4.string()).exit_code == 0);
  CHECK(slurp(path3) == slurp(path4));
  std::filesystem::remove(path3);
  std::filesystem::remove(path4);
}

TEST_CASE("non-default register counts flow through") {
  const RunResult r = run_cli("run --s 0.5 --p 0.5 --n-blanks 6 --m 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("SIGNALLING") != std::string::npos);

  // n < 2(m+1) is rejected
  CHECK(run_cli("run --n-blanks 3 --m 1").exit_code != 0);
}
