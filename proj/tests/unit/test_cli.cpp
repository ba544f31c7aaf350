#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "json.hpp"

using namespace wreathdet;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "wreathdet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(args);
  CHECK(r.code == expected_code);
  return nlohmann::json::parse(r.out);
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("wreathdet_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& body) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << body;
  return path.string();
}

std::string json_matrix(const std::vector<std::vector<std::string>>& rows) {
  nlohmann::json doc;
  doc["rows"] = rows.size();
  doc["cols"] = rows.front().size();
  doc["entries"] = rows;
  return doc.dump();
}

std::string random_matrix_file(const std::string& name, std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-999, 999), den(1, 999);
  std::vector<std::vector<std::string>> entries(rows);
  for (auto& row : entries)
    for (std::size_t j = 0; j < cols; ++j) row.push_back(std::to_string(num(rng)) + "/" + std::to_string(den(rng)));
  return write_file(name, json_matrix(entries));
}

}  // namespace

TEST_CASE("matrix files: JSON and CSV") {
  const auto a = cli::parse_matrix(R"({"rows": 2, "cols": 2, "entries": [["1", "-2/4"], [3, "0"]]})");
  CHECK(a == RationalMatrix::from_rows({{1, Rational(-1, 2)}, {3, 0}}));
  CHECK(cli::parse_matrix("1, -1/2\n3,0\n\n") == a);
  CHECK_THROWS_AS(cli::parse_matrix(R"({"rows": 3, "cols": 2, "entries": [["1", "2"], ["3", "4"]]})"), ParseError);
  CHECK_THROWS_AS(cli::parse_matrix(R"({"entries": [["1", "2"], ["3"]]})"), ParseError);
  CHECK_THROWS_AS(cli::parse_matrix(R"({"entries": [["1", 0.5]]})"), ParseError);
  CHECK_THROWS_AS(cli::parse_matrix("1,2\n3\n"), ParseError);
  CHECK_THROWS_AS(cli::parse_matrix("1,x\n"), ParseError);
  CHECK_THROWS_AS(cli::parse_matrix("1,2/0\n"), ParseError);
  CHECK_THROWS_AS(cli::parse_matrix("{"), ParseError);
  CHECK_THROWS_AS(cli::parse_matrix(""), ParseError);
}

TEST_CASE("adet") {
  const auto ones = write_file("ones3.csv", "1,1,1\n1,1,1\n1,1,1\n");
  auto r = run({"adet", ones, "--alpha", "symbolic"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 + 3*a + 2*a^2\n");

  const auto m2 = write_file("m2.json", json_matrix({{"1", "2"}, {"3", "4"}}));
  r = run({"adet", m2, "--alpha", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "-2\n");
  CHECK(run({"adet", m2, "--alpha", "1"}).out == "10\n");

  const auto random5 = random_matrix_file("r5.json", 5, 5, 11);
  const auto doc = run_json({"adet", random5, "--alpha", "-2/7", "--method", "both"}, 0);
  CHECK(doc["agree"] == true);
  CHECK(doc["values"]["sum"] == doc["values"]["laplace"]);
  CHECK(run_json({"adet", random5, "--method", "both"}, 0)["agree"] == true);
}

TEST_CASE("wrdet") {
  const auto u2 = write_file("u2.csv", "1,0,0\n1,0,0\n0,1,0\n0,0,1\n0,1,0\n0,0,1\n");
  auto r = run({"wrdet", u2, "-k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1/16\n");

  const auto plex = write_file("plex.csv", "1,0,0\n1,0,0\n0,1,0\n0,1,0\n0,0,1\n0,0,1\n");
  CHECK(run({"wrdet", plex, "-k", "2", "--method", "symmetric"}).out == "1/8\n");
  CHECK(run({"wrdet", plex, "-k", "2", "--method", "all"}).code == 0);

  const auto random6 = random_matrix_file("r6x3.json", 6, 3, 5);
  const auto r_all = run({"--format", "json", "wrdet", random6, "-k", "2", "--method", "all"});
  const auto doc = nlohmann::json::parse(r_all.out);
  const auto& v = doc["values"];
  CHECK(v["symmetric"] == v["direct"]);
  CHECK(v["monomial"] == v["direct"]);
  CHECK(v["tableaux-dual"] == v["direct"]);
  const bool agree = v["tableaux"] == v["direct"];
  CHECK(doc["agree"] == agree);
  CHECK(r_all.code == (agree ? 0 : 1));
}

TEST_CASE("verify") {
  const auto doc = run_json({"verify", "alphadet", "--seed", "1"}, 0);
  CHECK(doc["passed"] == true);
  CHECK(doc["seed"] == 1);
  CHECK(doc["suites"].size() == 1);

  const auto r = run({"--format", "json", "verify", "symfun", "--seed", "7"});
  const auto sym = nlohmann::json::parse(r.out);
  CHECK(r.code == (sym["passed"] == true ? 0 : 1));
  int cauchy = 0;
  for (const auto& c : sym["suites"][0]["checks"]) {
    if (c["name"].get<std::string>().rfind("Cauchy", 0) == 0) {
      CHECK(c["passed"] == true);
      ++cauchy;
    }
  }
  CHECK(cauchy == 2);
  if (sym["passed"] == false) CHECK(sym.contains("first_failure"));

  const auto all = nlohmann::json::parse(run({"--format", "json", "verify", "all"}).out);
  CHECK(all["suites"].size() == 4);
}

TEST_CASE("xi-scan") {
  const auto doc = run_json({"xi-scan", "--max-kn", "6"}, 0);
  std::map<std::pair<int, int>, std::string> dets;
  for (const auto& p : doc["pairs"]) {
    CHECK(p["positive_definite"] == true);
    dets[{p["n"].get<int>(), p["k"].get<int>()}] = p["det"].get<std::string>();
  }
  CHECK(dets.size() == 3);
  CHECK(dets[{2, 2}] == "3/4");
  CHECK(dets[{3, 2}] == "81/512");
  CHECK(dets[{2, 3}] == "16/81");
  CHECK(doc["all_positive_definite"] == true);
}

TEST_CASE("exit codes") {
  const auto ones = write_file("ones3b.csv", "1,1,1\n1,1,1\n1,1,1\n");
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"adet"}).code == 2);
  CHECK(run({"adet", (scratch_dir() / "missing.csv").string()}).code == 2);
  CHECK(run({"adet", ones, "--alpha", "x/2"}).code == 2);
  CHECK(run({"adet", ones, "--method", "magic"}).code == 2);
  CHECK(run({"wrdet", ones, "-k", "2"}).code == 2);
  CHECK(run({"verify", "nothing"}).code == 2);
  CHECK(run({"--format", "yaml", "verify", "alphadet"}).code == 2);
  const auto capped = run({"--cap-factorial", "2", "adet", ones});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("cap") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reports are deterministic; wall time only on request") {
  const auto random4 = random_matrix_file("r4.json", 4, 4, 3);
  const auto first = run({"--format", "json", "adet", random4, "--method", "both"});
  const auto second = run({"--format", "json", "adet", random4, "--method", "both"});
  CHECK(first.out == second.out);
  CHECK(first.out.find("wall_time") == std::string::npos);
  CHECK(run({"--format", "json", "verify", "spherical", "--seed", "3"}).out ==
        run({"--format", "json", "verify", "spherical", "--seed", "3"}).out);
  const auto timed = nlohmann::json::parse(run({"--format", "json", "--timing", "adet", random4}).out);
  CHECK(timed.contains("wall_time_seconds"));

  const auto target = (scratch_dir() / "report.json").string();
  const auto written = run({"--format", "json", "--output", target, "adet", random4, "--method", "both"});
  CHECK(written.out.empty());
  std::ifstream in(target);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str() == first.out);
}

TEST_CASE("installed binary") {
  const auto ones = write_file("ones3c.csv", "1,1,1\n1,1,1\n1,1,1\n");
  const std::string tool = WREATHDET_TOOL_PATH;
  const std::string out = (scratch_dir() / "tool.out").string();
  int status = std::system((tool + " adet " + ones + " > " + out).c_str());
  CHECK(WEXITSTATUS(status) == 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "1 + 3*a + 2*a^2");
  status = std::system((tool + " --cap-factorial 2 adet " + ones + " 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(status) == 3);
  status = std::system((tool + " adet 2> /dev/null").c_str());
  CHECK(WEXITSTATUS(status) == 2);
}
