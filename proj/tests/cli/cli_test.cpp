// Drives the installed command-line binary end to end: exit-code contract,
// output formats, and byte determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd =
      std::string(HYPERIS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.output.append(buf, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// Scratch directory shared by the cases below.
const fs::path& scratch() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / "hyperis_cli_test";
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  const fs::path p = scratch() / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("verify prints the identity and exits 0 on pass") {
  const auto k2 = write_file("k2.txt", "2 1\n0 1\n");
  const auto result = run_cli("verify --graph " + k2 + " --k 3 --b 1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("lhs=7") != std::string::npos);
  CHECK(result.output.find("rhs=7") != std::string::npos);
  CHECK(result.output.find("PASS") != std::string::npos);
}

TEST_CASE("exit codes") {
  SUBCASE("malformed input file is a parse error") {
    const auto bad = write_file("bad.txt", "not a graph\n");
    const auto result = run_cli("count --hypergraph " + bad);
    CHECK(result.exit_code == 5);
    CHECK(result.output.empty());  // no partial output
  }
  SUBCASE("invalid parameters are a usage error") {
    const auto k2 = write_file("k2b.txt", "2 1\n0 1\n");
    CHECK(run_cli("verify --graph " + k2 + " --k 3 --b 2").exit_code == 2);
    CHECK(run_cli("gen --family cycle --n 2").exit_code == 2);
    CHECK(run_cli("scan --k-min 2 --k-max 17 --b 1 --delta 3").exit_code == 2);
  }
  SUBCASE("unknown flags are a usage error") {
    CHECK(run_cli("count --no-such-flag").exit_code == 2);
  }
  SUBCASE("oversized instances are a resource cap") {
    std::string big = "40 0\n";
    const auto path = write_file("big.txt", big);
    const auto result = run_cli("count --hypergraph " + path);
    CHECK(result.exit_code == 3);
  }
}

TEST_CASE("gen is deterministic and honors the seed") {
  const auto a = run_cli("gen --family random-regular --n 10 --degree 3 --seed 42");
  const auto b = run_cli("gen --family random-regular --n 10 --degree 3 --seed 42");
  const auto c = run_cli("gen --family random-regular --n 10 --degree 3 --seed 43");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output != c.output);
  CHECK(a.output.substr(0, 5) == "10 15");
}

TEST_CASE("reduce emits the hypergraph and the sidecar map") {
  const auto k2 = write_file("k2c.txt", "2 1\n0 1\n");
  const auto hyper = (scratch() / "k2_gadget.txt").string();
  const auto map = (scratch() / "k2_map.txt").string();
  const auto result = run_cli("reduce --graph " + k2 + " --k 3 --b 1 -o " +
                              hyper + " --map " + map);
  CHECK(result.exit_code == 0);
  CHECK(read_file(hyper) == "3 1\n3 0 1 2\n");
  CHECK(read_file(map) == "block 0 0\nblock 1 1\nfiller 0 1 2\n");

  const auto count = run_cli("count --hypergraph " + hyper);
  CHECK(count.exit_code == 0);
  CHECK(count.output.find("independent_sets=7") != std::string::npos);
}

TEST_CASE("z command") {
  const auto k2 = write_file("k2d.txt", "2 1\n0 1\n");
  const auto result = run_cli("z --graph " + k2 + " --k 3 --b 1 --format json");
  CHECK(result.exit_code == 0);
  const auto j = nlohmann::json::parse(result.output);
  CHECK(j["partition_function"] == "7/2");
  CHECK(j["gamma"] == "1/2");
}

TEST_CASE("lemma certifies every parameter pair") {
  const auto result = run_cli("lemma --k-max 10 --format csv");
  CHECK(result.exit_code == 0);
  CHECK(result.output.rfind(
            "k,b,d,probe,two_step_gap,one_step_gap,pass,precision_bits\n",
            0) == 0);
  CHECK(result.output.find("false") == std::string::npos);
}

TEST_CASE("scan output") {
  SUBCASE("CSV columns follow the documented schema") {
    const auto result =
        run_cli("scan --k-min 2 --k-max 2 --b 1 --delta 11 --format csv");
    CHECK(result.exit_code == 0);
    CHECK(result.output.rfind("k,b,delta,d,regime,q_minus,q_times,q_plus,"
                              "threshold_paper,threshold_hypertree,"
                              "precision_bits\n",
                              0) == 0);
    CHECK(result.output.find("NonUnique") != std::string::npos);
  }

  SUBCASE("unique rows leave the outer roots empty") {
    const auto result =
        run_cli("scan --k-min 2 --k-max 2 --b 1 --delta 3 --format csv");
    CHECK(result.output.find(",Unique,,") != std::string::npos);
  }

  SUBCASE("empty delta range yields an empty table") {
    const auto result = run_cli(
        "scan --k-min 2 --k-max 2 --b 1 --delta-min 7 --delta-max 6 "
        "--format csv");
    CHECK(result.exit_code == 0);
    CHECK(result.output ==
          "k,b,delta,d,regime,q_minus,q_times,q_plus,threshold_paper,"
          "threshold_hypertree,precision_bits\n");
  }

  SUBCASE("JSON numeric fields round-trip at the printed precision") {
    const auto result =
        run_cli("scan --k-min 2 --k-max 2 --b 1 --delta 11 --format json");
    CHECK(result.exit_code == 0);
    const auto parsed = nlohmann::json::parse(result.output);
    const auto reprinted = nlohmann::json::parse(parsed.dump());
    CHECK(parsed == reprinted);
    const auto& row = parsed["rows"][0];
    CHECK(row["regime"] == "NonUnique");
    CHECK(row["threshold_paper"] == 11);
    const double q_times = row["q_times"].get<double>();
    CHECK(q_times == doctest::Approx(5.42663315201).epsilon(1e-9));
  }

  SUBCASE("identical configuration gives identical bytes") {
    const std::string args =
        "scan --k-min 2 --k-max 3 --b 1 --delta-min 10 --delta-max 11 "
        "--format json";
    CHECK(run_cli(args).output == run_cli(args).output);
  }
}
