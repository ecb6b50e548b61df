// Copyright 2026 The nullcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// nullcert command-line front end. Everything goes through the C API.
//
// Exit codes: 0 infeasible (certificate found) or success, 2 undecided,
// 3 feasible, 1 any error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nullcert/nullcert.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitError = 1;

struct Failure {
  std::string message;
};

// Owns a string returned by the C API.
std::string take(char* s) {
  std::string out = s ? s : "";
  nc_string_free(s);
  return out;
}

void check(nc_status status, const char* what) {
  if (status == NC_OK) return;
  std::string msg = std::string(what) + ": " + nc_status_string(status);
  if (*nc_last_error()) msg += "\n" + std::string(nc_last_error());
  throw Failure{msg};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{"cannot write " + path};
  out << text;
}

bool parse_switch(const std::string& v) {
  if (v == "on") return true;
  if (v == "off") return false;
  throw Failure{"expected on|off, got '" + v + "'"};
}

size_t parse_budget(const std::string& text) {
  size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw Failure{"malformed memory budget '" + text + "'"};
  }
  std::string suffix = text.substr(pos);
  unsigned shift = 0;
  if (suffix == "K" || suffix == "k" || suffix == "KiB") shift = 10;
  else if (suffix == "M" || suffix == "m" || suffix == "MiB") shift = 20;
  else if (suffix == "G" || suffix == "g" || suffix == "GiB") shift = 30;
  else if (!suffix.empty()) throw Failure{"unknown memory budget suffix in '" + text + "'"};
  return static_cast<size_t>(value) << shift;
}

// Drops '#' comment lines so a state file may carry a header.
std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!out.empty()) out += ' ';
    out += line;
  }
  return out;
}

class Task {
 public:
  explicit Task(const std::string& path) {
    check(nc_task_load(path.c_str(), &task_), ("loading " + path).c_str());
  }
  ~Task() { nc_task_free(task_); }
  Task(const Task&) = delete;
  Task& operator=(const Task&) = delete;
  const nc_task* get() const { return task_; }
  std::string digest() const {
    char* s = nullptr;
    check(nc_task_digest(task_, &s), "digest");
    return take(s);
  }

 private:
  nc_task* task_ = nullptr;
};

struct TaskArgs {
  std::string task;
  std::string multi_task;

  void add(CLI::App* cmd) {
    cmd->add_option("--task", task, "Task file");
    cmd->add_option("--multi-task", multi_task, "Multi-pair task file");
  }
  std::string path() const {
    if (task.empty() == multi_task.empty()) throw Failure{"give exactly one of --task or --multi-task"};
    return task.empty() ? multi_task : task;
  }
};

struct SearchArgs {
  unsigned max_degree = 4;
  std::string gamma_in_beta = "on";
  std::string grading = "on";
  std::string arithmetic = "exact";
  double tol = 1e-9;
  std::string memory_budget;
  std::string measure = "matrix";

  void add(CLI::App* cmd) {
    cmd->add_option("--max-degree", max_degree, "Highest certificate degree to try")->capture_default_str();
    cmd->add_option("--gamma-in-beta", gamma_in_beta, "Let multipliers use gamma (on|off)")->capture_default_str();
    cmd->add_option("--grading", grading, "Weight-grading filter (on|off)")->capture_default_str();
    cmd->add_option("--arithmetic", arithmetic, "exact|float")->capture_default_str();
    cmd->add_option("--tol", tol, "Residual tolerance for float screening")->capture_default_str();
    cmd->add_option("--memory-budget", memory_budget, "Bytes, with optional K/M/G suffix (default: "
                                                      "NULLA_MEMORY_BUDGET or 2G)");
    cmd->add_option("--degree-measure", measure, "matrix|total")->capture_default_str();
  }

  nc_search_options options() const {
    nc_search_options o;
    nc_search_options_default(&o);
    o.max_degree = max_degree;
    o.gamma_in_beta = parse_switch(gamma_in_beta);
    o.w_grading = parse_switch(grading);
    if (arithmetic == "exact") o.arithmetic = NC_ARITH_EXACT;
    else if (arithmetic == "float") o.arithmetic = NC_ARITH_FLOAT;
    else throw Failure{"--arithmetic must be exact or float"};
    o.float_tol = tol;
    if (!memory_budget.empty()) o.memory_budget = parse_budget(memory_budget);
    if (measure == "matrix") o.measure = NC_MEASURE_MATRIX;
    else if (measure == "total") o.measure = NC_MEASURE_TOTAL;
    else throw Failure{"--degree-measure must be matrix or total"};
    return o;
  }

  json config() const {
    const auto o = options();
    return {{"max_degree", o.max_degree},
            {"gamma_in_beta", gamma_in_beta},
            {"grading", grading},
            {"arithmetic", arithmetic},
            {"tol", tol},
            {"memory_budget", o.memory_budget},
            {"degree_measure", measure}};
  }
};

int run_compile(const TaskArgs& args, const std::string& out) {
  Task task(args.path());
  nc_system* system = nullptr;
  check(nc_compile(task.get(), &system), "compile");
  char* text = nullptr;
  const nc_status st = nc_system_serialize(system, &text);
  nc_system_free(system);
  check(st, "serialize");
  write_output(out, take(text));
  return 0;
}

int run_certify(const TaskArgs& args, const SearchArgs& search, const std::string& out, std::string cert_path) {
  const std::string path = args.path();
  Task task(path);
  const auto opts = search.options();
  nc_report* report = nullptr;
  check(nc_certify(task.get(), &opts, &report), "certify");

  char* text = nullptr;
  nc_verdict verdict = NC_UNDECIDED;
  int aborted = 0;
  nc_certificate* cert = nullptr;
  nc_status st = nc_report_json(report, &text);
  if (st == NC_OK) st = nc_report_verdict(report, &verdict);
  if (st == NC_OK) st = nc_report_resource_abort(report, &aborted);
  if (st == NC_OK) st = nc_report_certificate(report, &cert);
  nc_report_free(report);
  check(st, "report");

  json j = json::parse(take(text));
  json full;
  full["config"] = {{"subcommand", "certify"},
                    {args.task.empty() ? "multi_task" : "task", path},
                    {"search", search.config()},
                    {"out", out},
                    {"certificate", nullptr}};
  full["input_digest"] = task.digest();
  if (cert) {
    if (cert_path.empty()) cert_path = (out.empty() || out == "-") ? "certificate.cert" : out + ".cert";
    char* ctext = nullptr;
    st = nc_certificate_serialize(cert, &ctext);
    unsigned degree = 0;
    nc_certificate_degree(cert, &degree);
    nc_certificate_free(cert);
    check(st, "certificate");
    write_output(cert_path, take(ctext));
    full["config"]["certificate"] = cert_path;
    std::cerr << "certificate of degree " << degree << " written to " << cert_path << "\n";
  }
  for (auto& [k, v] : j.items()) full[k] = v;
  write_output(out, full.dump(2) + "\n");

  std::cerr << "verdict: " << full["verdict"].get<std::string>() << "\n";
  if (aborted) {
    std::cerr << "search aborted on resources: " << full["resource_abort"].get<std::string>() << "\n";
    return kExitError;
  }
  return static_cast<int>(verdict);
}

int run_verify(const TaskArgs& args, const std::string& cert_path) {
  if (cert_path.empty()) throw Failure{"--certificate is required"};
  Task task(args.path());
  nc_certificate* cert = nullptr;
  check(nc_certificate_parse(read_file(cert_path).c_str(), &cert), ("parsing " + cert_path).c_str());
  int ok = 0;
  char* diag = nullptr;
  const nc_status st = nc_verify(task.get(), cert, &ok, &diag);
  nc_certificate_free(cert);
  check(st, "verify");
  if (!ok) {
    std::cerr << "certificate rejected: " << take(diag) << "\n";
    return kExitError;
  }
  std::cout << "certificate verified: sum of beta_k f_k is identically 1\n";
  return 0;
}

int run_canonicalize(unsigned n, unsigned m, const std::string& target, const std::string& out) {
  if (target.empty()) throw Failure{"--target is required"};
  nc_task* task = nullptr;
  check(nc_task_canonicalize(n, m, strip_comments(read_file(target)).c_str(), &task), "canonicalize");
  char* text = nullptr;
  const nc_status st = nc_task_serialize(task, &text);
  nc_task_free(task);
  check(st, "serialize");
  write_output(out, take(text));
  return 0;
}

int run_bounds(unsigned n, unsigned m, unsigned N, unsigned M, unsigned max_degree, bool as_json, bool table1,
               const std::string& out) {
  struct Row {
    unsigned n, m, N, M;
  };
  std::vector<Row> rows;
  if (table1)
    rows = {{2, 0, 3, 0}, {3, 1, 4, 1}, {2, 0, 4, 0}, {3, 1, 5, 1}};
  else
    rows = {{n, m, N, M}};
  std::string text;
  json all = json::array();
  for (const auto& r : rows) {
    char* s = nullptr;
    check(nc_bounds_text(r.n, r.m, r.N, r.M, max_degree, &s), "bounds");
    text += take(s);
    if (rows.size() > 1) text += "\n";
    check(nc_bounds_json(r.n, r.m, r.N, r.M, max_degree, &s), "bounds");
    all.push_back(json::parse(take(s)));
  }
  const std::string structured = (rows.size() == 1 ? all[0] : all).dump(2) + "\n";
  if (as_json) {
    write_output(out, structured);
  } else {
    std::cout << text;
    if (!out.empty() && out != "-") write_output(out, structured);
  }
  return 0;
}

int run_random_target(unsigned photons, unsigned modes, std::uint64_t seed, std::uint64_t denom,
                      const std::string& out) {
  char* s = nullptr;
  check(nc_random_target(photons, modes, seed, denom, &s), "random-target");
  std::string text = "# Haar-random target: " + std::to_string(photons) + " photons, " + std::to_string(modes) +
                     " modes, seed " + std::to_string(seed) + ", denominator " + std::to_string(denom) + "\n" +
                     take(s);
  write_output(out, text);
  return 0;
}

int run_reproduce(const std::string& suite, unsigned samples, std::uint64_t seed, std::optional<unsigned> max_degree,
                  bool extended, unsigned workers, const std::string& budget, const std::string& out) {
  nc_reproduce_options o;
  nc_reproduce_options_default(&o);
  o.samples = samples;
  o.seed = seed;
  o.max_degree = max_degree ? static_cast<int>(*max_degree) : -1;
  o.extended = extended ? 1 : 0;
  o.workers = workers;
  if (!budget.empty()) o.memory_budget = parse_budget(budget);
  std::string dir = out;
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    o.out_dir = dir.c_str();
  }
  char* s = nullptr;
  check(nc_reproduce(suite.c_str(), &o, &s), "reproduce");
  json report = json::parse(take(s));

  for (const auto& e : report["experiments"]) {
    std::string line = e["name"].get<std::string>();
    line.resize(std::max<std::size_t>(line.size(), 14), ' ');
    std::cout << line << "  " << e["status"].get<std::string>();
    if (e.contains("verdict")) std::cout << "  " << e["verdict"].get<std::string>();
    if (e.contains("degree")) std::cout << "  degree " << e["degree"] << " (ceiling " << e["ceiling"] << ")";
    const auto name = e["name"].get<std::string>();
    if (report["timing"].contains(name)) std::cout << "  " << report["timing"][name].get<double>() << " s";
    std::cout << "\n";
  }
  const auto& summary = report["summary"];
  std::cout << "passed " << summary["passed"] << ", failed " << summary["failed"] << ", skipped "
            << summary["skipped"] << "\n";
  if (!dir.empty()) write_output((std::filesystem::path(dir) / "report.json").string(), report.dump(2) + "\n");
  return summary["failed"].get<int>() == 0 ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nullcert: Nullstellensatz certificates for heralded linear-optical state generation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", nc_version());

  TaskArgs task_args;
  SearchArgs search;
  std::string out, cert_path;

  auto* compile = app.add_subcommand("compile", "Compile a task into its polynomial system");
  task_args.add(compile);
  compile->add_option("--out", out, "Output file (default stdout)");

  auto* certify = app.add_subcommand("certify", "Search for an infeasibility certificate");
  task_args.add(certify);
  search.add(certify);
  certify->add_option("--out", out, "JSON report (default stdout)");
  certify->add_option("--certificate", cert_path, "Certificate file (default <out>.cert)");

  auto* verify = app.add_subcommand("verify", "Check a certificate against a task");
  task_args.add(verify);
  verify->add_option("--certificate", cert_path, "Certificate file")->required();

  unsigned n = 0, m = 0, N = 0, M = 0, photons = 2, modes = 3, max_degree_bounds = 4;
  std::string target;
  auto* canonicalize = app.add_subcommand("canonicalize", "Write the canonical task for a target");
  canonicalize->add_option("--photons,-n", n, "Input photons n")->required();
  canonicalize->add_option("--herald-photons,-m", m, "Heralded photons m")->required();
  canonicalize->add_option("--target", target, "File holding the target state")->required();
  canonicalize->add_option("--out", out, "Task file (default stdout)");

  bool as_json = false, table1 = false;
  auto* bounds = app.add_subcommand("bounds", "Print equation counts, system size bounds and the degree bound");
  bounds->add_option("--photons,-n", n, "Input photons n");
  bounds->add_option("--herald-photons,-m", m, "Heralded photons m");
  bounds->add_option("--modes,-N", N, "Total modes N");
  bounds->add_option("--herald-modes,-M", M, "Heralded modes M");
  bounds->add_option("--max-degree", max_degree_bounds, "Tabulate sizes up to this degree")->capture_default_str();
  bounds->add_flag("--json", as_json, "Print structured output instead of the table");
  bounds->add_flag("--table1", table1, "All four Haar-random group geometries");
  bounds->add_option("--out", out, "Also write structured output here");

  std::uint64_t seed = 2024, denom = 1ull << 16;
  auto* random = app.add_subcommand("random-target", "Sample a rationalized Haar-random target state");
  random->add_option("--photons", photons, "Photons")->capture_default_str();
  random->add_option("--modes", modes, "Modes")->capture_default_str();
  random->add_option("--seed", seed, "Seed")->capture_default_str();
  random->add_option("--denominator", denom, "Rounding denominator, a power of two >= 2^16")->capture_default_str();
  random->add_option("--out", out, "State file (default stdout)");

  std::string suite = "default", budget;
  unsigned samples = 0, workers = 1;
  std::optional<unsigned> repro_degree;
  bool extended = false;
  auto* reproduce = app.add_subcommand("reproduce", "Run a named reproduction suite");
  reproduce->add_option("suite", suite,
                        "default | extended | bell3 | cnot1 | noon3..noon7 | table1 | table1:1..table1:4")
      ->capture_default_str();
  reproduce->add_option("--samples", samples, "Targets per Haar-random group (0 = suite default)");
  reproduce->add_option("--seed", seed, "Base seed")->capture_default_str();
  reproduce->add_option("--max-degree", repro_degree, "Override every experiment's degree cap");
  reproduce->add_flag("--extended", extended, "Enable the heavy experiments");
  reproduce->add_option("--workers", workers, "Concurrent experiments")->capture_default_str();
  reproduce->add_option("--memory-budget", budget, "Per-experiment budget, bytes with optional K/M/G suffix");
  reproduce->add_option("--out", out, "Directory for report.json and certificates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*compile) return run_compile(task_args, out);
    if (*certify) return run_certify(task_args, search, out, cert_path);
    if (*verify) return run_verify(task_args, cert_path);
    if (*canonicalize) return run_canonicalize(n, m, target, out);
    if (*bounds) {
      if (!table1 && (n == 0 || N == 0)) throw Failure{"bounds needs --photons and --modes, or --table1"};
      return run_bounds(n, m, N, M, max_degree_bounds, as_json, table1, out);
    }
    if (*random) return run_random_target(photons, modes, seed, denom, out);
    if (*reproduce) return run_reproduce(suite, samples, seed, repro_degree, extended, workers, budget, out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
