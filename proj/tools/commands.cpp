#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wreathdet/alphadet.hpp"
#include "wreathdet/spherical.hpp"
#include "wreathdet/tableaux.hpp"
#include "wreathdet/verify.hpp"
#include "wreathdet/wreath.hpp"

namespace wreathdet::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

Rational entry_value(const nlohmann::json& cell) {
  if (cell.is_string()) return parse_rational(cell.get<std::string>());
  if (cell.is_number_integer()) return parse_rational(cell.dump());
  throw ParseError("matrix entries must be fraction strings or integers, got " + cell.dump());
}

RationalMatrix parse_json_matrix(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError("matrix file needs an \"entries\" array");
  const auto& entries = doc["entries"];
  const std::size_t rows = entries.size();
  const std::size_t cols = rows == 0 ? 0 : entries[0].size();
  if (doc.contains("rows") && doc["rows"] != rows) throw ParseError("\"rows\" does not match the entries");
  if (doc.contains("cols") && doc["cols"] != cols) throw ParseError("\"cols\" does not match the entries");
  RationalMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols) throw ParseError("ragged row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = entry_value(entries[i][j]);
  }
  return a;
}

RationalMatrix parse_csv_matrix(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<Rational> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_rational(trim(cell)));
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError("ragged row " + std::to_string(rows.size() + 1));
    rows.push_back(std::move(row));
  }
  return RationalMatrix::from_rows(rows);
}

Json to_json(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

Json to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed();
  j["cases"] = c.cases;
  j["failures"] = c.failures;
  if (!c.passed()) {
    Json ce = Json::object();
    for (const auto& [key, value] : c.counterexample) ce[key] = value;
    j["counterexample"] = ce;
  }
  return j;
}

struct Options {
  int cap_factorial = 12;
  std::string output;
  std::string format = "text";
  bool timing = false;
};

struct Outcome {
  Json report;
  std::string text;
  int code = kOk;
};

Limits limits_for(const Options& options) {
  Limits limits;
  limits.max_degree = options.cap_factorial;
  return limits;
}

Outcome cmd_adet(const std::string& file, const std::string& alpha_text, const std::string& method, const Limits& limits) {
  const auto a = read_matrix_file(file);
  if (a.rows() != a.cols()) throw ShapeError("adet needs a square matrix, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  const auto alpha = AlphaParam::parse(alpha_text);

  std::vector<std::pair<std::string, std::string>> values;
  auto evaluate = [&](AdetMethod m) -> std::string {
    if (alpha.is_symbolic()) return adet(to_polynomial(a), alpha.as_polynomial(), m, limits).to_string();
    return to_string(adet(a, alpha.rational(), m, limits));
  };
  if (method == "sum" || method == "both") values.emplace_back("sum", evaluate(AdetMethod::sum));
  if (method == "laplace" || method == "both") values.emplace_back("laplace", evaluate(AdetMethod::laplace));

  Outcome o;
  bool agree = true;
  for (const auto& v : values) agree = agree && v.second == values.front().second;
  o.report["command"] = "adet";
  o.report["input"] = file;
  o.report["alpha"] = alpha.to_string();
  o.report["method"] = method;
  o.report["n"] = a.rows();
  o.report["value"] = values.front().second;
  if (values.size() > 1) {
    Json per = Json::object();
    for (const auto& [name, value] : values) per[name] = value;
    o.report["values"] = per;
    o.report["agree"] = agree;
  }
  if (agree) {
    o.text = values.front().second + "\n";
  } else {
    for (const auto& [name, value] : values) o.text += name + ": " + value + "\n";
    o.text += "methods disagree\n";
    o.code = kFailure;
  }
  return o;
}

const std::vector<std::pair<std::string, WrdetMethod>>& wrdet_methods() {
  static const std::vector<std::pair<std::string, WrdetMethod>> methods = {
      {"direct", WrdetMethod::direct},
      {"tableaux", WrdetMethod::tableaux},
      {"tableaux-dual", WrdetMethod::tableaux_dual},
      {"symmetric", WrdetMethod::symmetric},
      {"monomial", WrdetMethod::monomial},
  };
  return methods;
}

Outcome cmd_wrdet(const std::string& file, int k, const std::string& method, const Limits& limits) {
  const auto a = read_matrix_file(file);
  if (k < 1) throw ShapeError("k must be positive");
  if (a.rows() != a.cols() * static_cast<std::size_t>(k))
    throw ShapeError("wrdet needs a kn x n matrix, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " with k=" + std::to_string(k));

  std::vector<std::pair<std::string, std::string>> values;
  for (const auto& [name, m] : wrdet_methods())
    if (method == "all" || method == name) values.emplace_back(name, to_string(wrdet(a, k, m, limits)));

  Outcome o;
  bool agree = true;
  for (const auto& v : values) agree = agree && v.second == values.front().second;
  o.report["command"] = "wrdet";
  o.report["input"] = file;
  o.report["k"] = k;
  o.report["n"] = a.cols();
  o.report["method"] = method;
  if (values.size() == 1) {
    o.report["value"] = values.front().second;
    o.text = values.front().second + "\n";
    return o;
  }
  Json per = Json::object();
  for (const auto& [name, value] : values) {
    per[name] = value;
    o.text += name + ": " + value + "\n";
  }
  o.report["values"] = per;
  o.report["agree"] = agree;
  o.text += agree ? "all methods agree\n" : "methods disagree\n";
  if (!agree) o.code = kFailure;
  return o;
}

Outcome cmd_verify(const std::string& suite, std::uint64_t seed, const Limits& limits) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites = {suite};
  }
  Outcome o;
  o.report["command"] = "verify";
  o.report["suite"] = suite;
  o.report["seed"] = seed;
  Json reports = Json::array();
  bool passed = true;
  const CheckResult* first = nullptr;
  std::string first_suite;
  std::vector<SuiteReport> results;
  results.reserve(suites.size());
  for (const auto& name : suites) results.push_back(run_suite(name, seed, limits));
  for (const auto& r : results) {
    Json j;
    j["suite"] = r.suite;
    j["passed"] = r.passed();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      checks.push_back(to_json(c));
      o.text += std::string(c.passed() ? "PASS " : "FAIL ") + r.suite + ": " + c.name + " (" + std::to_string(c.cases) + " cases";
      if (!c.passed()) o.text += ", " + std::to_string(c.failures) + " failed";
      o.text += ")\n";
      if (!c.passed() && first == nullptr) {
        first = &c;
        first_suite = r.suite;
      }
    }
    j["checks"] = checks;
    reports.push_back(j);
    passed = passed && r.passed();
  }
  o.report["suites"] = reports;
  o.report["passed"] = passed;
  if (first != nullptr) {
    Json ce = to_json(*first);
    ce["suite"] = first_suite;
    o.report["first_failure"] = ce;
    o.text += "first counterexample (" + first_suite + ": " + first->name + "):\n";
    for (const auto& [key, value] : first->counterexample) o.text += "  " + key + " = " + value + "\n";
    o.code = kFailure;
  }
  return o;
}

Outcome cmd_xi_scan(int max_kn, const Limits& limits, std::ostream& err) {
  Outcome o;
  o.report["command"] = "xi-scan";
  o.report["max_kn"] = max_kn;
  Json pairs = Json::array();
  bool all_pd = true;
  std::size_t skipped = 0;
  for (int kn = 4; kn <= max_kn; ++kn) {
    for (int n = 2; n <= kn / 2; ++n) {
      if (kn % n != 0) continue;
      const int k = kn / n;
      Json j;
      j["n"] = n;
      j["k"] = k;
      j["order"] = hook_f(Partition::rectangle(n, k));
      const std::string label = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
      try {
        const auto xi = xi_matrix(n, k, limits);
        const auto d = sylvester(xi.entries);
        j["det"] = to_string(d.det);
        j["leading_minors"] = to_json(d.leading_minors);
        j["positive_definite"] = d.positive_definite;
        o.text += label + " order " + std::to_string(xi.order()) + " det " + to_string(d.det) +
                  (d.positive_definite ? " positive definite\n" : " NOT POSITIVE DEFINITE\n");
        if (!d.positive_definite) {
          all_pd = false;
          err << "xi-scan: Xi" << label << " is not positive definite\n";
        }
      } catch (const CapExceeded& e) {
        j["skipped"] = e.what();
        o.text += label + " skipped: " + e.what() + "\n";
        ++skipped;
      }
      pairs.push_back(j);
    }
  }
  o.report["pairs"] = pairs;
  o.report["skipped"] = skipped;
  o.report["all_positive_definite"] = all_pd;
  if (!all_pd) o.code = kFailure;
  return o;
}

}  // namespace

RationalMatrix parse_matrix(const std::string& text) {
  const auto body = trim(text);
  if (body.empty()) throw ParseError("empty matrix file");
  return body.front() == '{' ? parse_json_matrix(body) : parse_csv_matrix(body);
}

RationalMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix(buffer.str());
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact alpha-determinants, wreath determinants and zonal spherical functions"};
  app.name("wreathdet");
  app.require_subcommand(1);
  app.fallthrough();

  Options options;
  app.add_option("--cap-factorial", options.cap_factorial, "Largest N for which S_N is enumerated")->check(CLI::Range(1, 20));
  app.add_option("--output", options.output, "Write the report to this path");
  app.add_option("--format", options.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", options.timing, "Include wall time in the report");

  std::string file;
  std::string alpha = "symbolic";
  std::string adet_method = "sum";
  auto* adet_cmd = app.add_subcommand("adet", "alpha-determinant of a square matrix");
  adet_cmd->add_option("file", file, "MatrixFile JSON or CSV")->required();
  adet_cmd->add_option("--alpha", alpha, "Fraction or 'symbolic'");
  adet_cmd->add_option("--method", adet_method)->check(CLI::IsMember({"sum", "laplace", "both"}));

  int k = 0;
  std::string wrdet_method = "direct";
  auto* wrdet_cmd = app.add_subcommand("wrdet", "wreath determinant of a kn x n matrix");
  wrdet_cmd->add_option("file", file, "MatrixFile JSON or CSV")->required();
  wrdet_cmd->add_option("-k", k, "Plex order")->required();
  wrdet_cmd->add_option("--method", wrdet_method)
      ->check(CLI::IsMember({"direct", "tableaux", "tableaux-dual", "symmetric", "monomial", "all"}));

  std::string suite;
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Run a seeded identity suite");
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember({"alphadet", "wreath", "symfun", "spherical", "all"}));
  verify_cmd->add_option("--seed", seed);

  int max_kn = 10;
  auto* scan_cmd = app.add_subcommand("xi-scan", "Exact Sylvester test of Xi_{n,k} for n, k >= 2");
  scan_cmd->add_option("--max-kn", max_kn)->check(CLI::Range(4, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "wreathdet: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  const auto limits = limits_for(options);
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (*adet_cmd) {
      outcome = cmd_adet(file, alpha, adet_method, limits);
    } else if (*wrdet_cmd) {
      outcome = cmd_wrdet(file, k, wrdet_method, limits);
    } else if (*verify_cmd) {
      outcome = cmd_verify(suite, seed, limits);
    } else {
      outcome = cmd_xi_scan(max_kn, limits, err);
    }
  } catch (const CapExceeded& e) {
    err << "wreathdet: cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const ParseError& e) {
    err << "wreathdet: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "wreathdet: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "wreathdet: " << e.what() << "\n";
    return kFailure;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string rendered;
  if (options.format == "json") {
    if (options.timing) outcome.report["wall_time_seconds"] = seconds;
    rendered = outcome.report.dump(2) + "\n";
  } else {
    rendered = outcome.text;
    if (options.timing) rendered += "wall time " + std::to_string(seconds) + " s\n";
  }
  if (options.output.empty()) {
    out << rendered;
  } else {
    std::ofstream file_out(options.output);
    if (!file_out) {
      err << "wreathdet: cannot write " << options.output << "\n";
      return kUsage;
    }
    file_out << rendered;
  }
  return outcome.code;
}

}  // namespace wreathdet::cli
