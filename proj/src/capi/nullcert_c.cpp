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

#include "nullcert/nullcert.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "bounds/bounds.hpp"
#include "nulla/report.hpp"
#include "repro/pipeline.hpp"
#include "repro/reproduce.hpp"
#include "util/error.hpp"

using namespace nullcert;

struct nc_task {
  fock::AnyTask task;
};
struct nc_system {
  compiler::PolynomialSystem system;
};
struct nc_report {
  repro::CertifyResult result;
};
struct nc_certificate {
  nulla::Certificate cert;
};

namespace {

thread_local std::string g_last_error;

nc_status fail(nc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
nc_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return NC_OK;
  } catch (const nullcert::Error& e) {
    return fail(static_cast<nc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NC_ERR_RESOURCE, "out of memory");
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(NC_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(NC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NC_ERR_INTERNAL, "unknown failure");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define NC_REQUIRE(ptr)                                                       \
  do {                                                                        \
    if (!(ptr)) return fail(NC_ERR_INVALID_HANDLE, "null handle: " #ptr);     \
  } while (0)

#define NC_REQUIRE_OUT(ptr)                                                   \
  do {                                                                        \
    if (!(ptr)) return fail(NC_ERR_INVALID_ARGUMENT, "null output: " #ptr);   \
  } while (0)

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open ") + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nulla::CertificateSearchOptions convert(const nc_search_options& o) {
  nulla::CertificateSearchOptions out;
  out.max_degree = o.max_degree;
  out.gamma_in_beta = o.gamma_in_beta != 0;
  out.w_grading = o.w_grading != 0;
  out.arithmetic = o.arithmetic == NC_ARITH_FLOAT ? fock::Arithmetic::floating : fock::Arithmetic::exact;
  out.float_tol = o.float_tol;
  out.memory_budget = o.memory_budget;
  out.measure = o.measure == NC_MEASURE_TOTAL ? nulla::DegreeMeasure::total : nulla::DegreeMeasure::matrix;
  return out;
}

nlohmann::ordered_json profile_json(const bounds::ScalingProfile& p) {
  nlohmann::ordered_json j;
  j["n"] = p.geometry.n;
  j["m"] = p.geometry.m;
  j["N"] = p.geometry.N;
  j["M"] = p.geometry.M;
  j["N_T"] = p.target_modes;
  j["V_max"] = p.v_max.get_str();
  j["equations"] = p.s.get_str();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t d = 0; d < p.column_bounds.size(); ++d)
    rows.push_back({{"degree", d}, {"columns", p.column_bounds[d].get_str()}, {"rows", p.row_bounds[d].get_str()}});
  j["per_degree"] = std::move(rows);
  j["degree_upper_bound"] = p.has_degree_bound ? nlohmann::ordered_json(p.degree_bound.get_str()) : nullptr;
  if (p.degree_bound_fitted) j["degree_upper_bound_note"] = "reverse-engineered from published two-photon bounds";
  return j;
}

}  // namespace

extern "C" {

const char* nc_version(void) { return "0.1.0"; }

const char* nc_status_string(nc_status status) {
  switch (status) {
    case NC_OK: return "ok";
    case NC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case NC_ERR_PARSE: return "parse error";
    case NC_ERR_VALIDATION: return "validation error";
    case NC_ERR_RESOURCE: return "resource limit";
    case NC_ERR_VERIFICATION: return "verification failure";
    case NC_ERR_IO: return "i/o error";
    case NC_ERR_INTERNAL: return "internal error";
    case NC_ERR_INVALID_HANDLE: return "invalid handle";
  }
  return "unknown status";
}

const char* nc_last_error(void) { return g_last_error.c_str(); }

void nc_string_free(char* s) { std::free(s); }

nc_status nc_task_parse(const char* text, nc_task** out) {
  NC_REQUIRE_OUT(out);
  if (!text) return fail(NC_ERR_INVALID_ARGUMENT, "null task text");
  return guarded([&] { *out = new nc_task{fock::parse_task_file(text)}; });
}

nc_status nc_task_load(const char* path, nc_task** out) {
  NC_REQUIRE_OUT(out);
  if (!path) return fail(NC_ERR_INVALID_ARGUMENT, "null path");
  return guarded([&] { *out = new nc_task{fock::parse_task_file(read_file(path))}; });
}

nc_status nc_task_canonicalize(unsigned n, unsigned m, const char* target_state, nc_task** out) {
  NC_REQUIRE_OUT(out);
  if (!target_state) return fail(NC_ERR_INVALID_ARGUMENT, "null target state");
  return guarded([&] {
    auto spec = fock::canonicalize(n, m, fock::parse_state(target_state));
    fock::validate_task(spec);
    *out = new nc_task{std::move(spec)};
  });
}

nc_status nc_task_serialize(const nc_task* task, char** out) {
  NC_REQUIRE(task);
  NC_REQUIRE_OUT(out);
  return guarded([&] {
    if (const auto* t = std::get_if<fock::TaskSpec>(&task->task))
      *out = dup_string(fock::serialize_task(*t));
    else
      *out = dup_string(fock::serialize_multi_task(std::get<fock::MultiTaskSpec>(task->task)));
  });
}

nc_status nc_task_digest(const nc_task* task, char** out) {
  NC_REQUIRE(task);
  NC_REQUIRE_OUT(out);
  return guarded([&] { *out = dup_string(repro::task_digest(task->task)); });
}

nc_status nc_task_is_multi(const nc_task* task, int* out) {
  NC_REQUIRE(task);
  NC_REQUIRE_OUT(out);
  *out = std::holds_alternative<fock::MultiTaskSpec>(task->task) ? 1 : 0;
  return NC_OK;
}

void nc_task_free(nc_task* task) { delete task; }

nc_status nc_compile(const nc_task* task, nc_system** out) {
  NC_REQUIRE(task);
  NC_REQUIRE_OUT(out);
  return guarded([&] { *out = new nc_system{repro::compile_any(task->task)}; });
}

nc_status nc_system_serialize(const nc_system* system, char** out) {
  NC_REQUIRE(system);
  NC_REQUIRE_OUT(out);
  return guarded([&] { *out = dup_string(compiler::serialize_system(system->system)); });
}

nc_status nc_system_equation_count(const nc_system* system, size_t* out) {
  NC_REQUIRE(system);
  NC_REQUIRE_OUT(out);
  *out = system->system.size();
  return NC_OK;
}

nc_status nc_system_variable_count(const nc_system* system, size_t* out) {
  NC_REQUIRE(system);
  NC_REQUIRE_OUT(out);
  *out = system->system.space->size();
  return NC_OK;
}

void nc_system_free(nc_system* system) { delete system; }

void nc_search_options_default(nc_search_options* out) {
  if (!out) return;
  const nulla::CertificateSearchOptions d;
  out->max_degree = d.max_degree;
  out->gamma_in_beta = d.gamma_in_beta ? 1 : 0;
  out->w_grading = d.w_grading ? 1 : 0;
  out->arithmetic = NC_ARITH_EXACT;
  out->float_tol = d.float_tol;
  try {
    out->memory_budget = repro::default_memory_budget();
  } catch (const std::exception&) {
    out->memory_budget = nulla::kDefaultMemoryBudget;
  }
  out->measure = NC_MEASURE_MATRIX;
}

nc_status nc_certify(const nc_task* task, const nc_search_options* options, nc_report** out) {
  NC_REQUIRE(task);
  NC_REQUIRE_OUT(out);
  nc_search_options opts;
  if (options)
    opts = *options;
  else
    nc_search_options_default(&opts);
  return guarded([&] { *out = new nc_report{repro::certify_task(task->task, convert(opts))}; });
}

nc_status nc_report_verdict(const nc_report* report, nc_verdict* out) {
  NC_REQUIRE(report);
  NC_REQUIRE_OUT(out);
  switch (report->result.report.verdict) {
    case nulla::Verdict::infeasible_proven: *out = NC_INFEASIBLE_PROVEN; break;
    case nulla::Verdict::feasible_proven: *out = NC_FEASIBLE_PROVEN; break;
    case nulla::Verdict::undecided: *out = NC_UNDECIDED; break;
  }
  return NC_OK;
}

nc_status nc_report_json(const nc_report* report, char** out) {
  NC_REQUIRE(report);
  NC_REQUIRE_OUT(out);
  return guarded([&] {
    const auto& r = report->result;
    nlohmann::ordered_json j;
    j["task_digest"] = r.digest;
    j["system"] = {{"variables", r.system.space->size()},
                   {"equations", r.system.size()},
                   {"emitted", r.system.emitted},
                   {"pruned", r.system.pruned},
                   {"photons", r.system.photons},
                   {"modes", r.system.modes},
                   {"herald_modes", r.system.herald_modes}};
    const auto body = nulla::report_json(r.report);
    for (auto& [k, v] : body.items()) j[k] = v;
    *out = dup_string(j.dump(2) + "\n");
  });
}

nc_status nc_report_certificate(const nc_report* report, nc_certificate** out) {
  NC_REQUIRE(report);
  NC_REQUIRE_OUT(out);
  return guarded([&] {
    const auto& cert = report->result.report.certificate;
    *out = cert ? new nc_certificate{*cert} : nullptr;
  });
}

nc_status nc_report_resource_abort(const nc_report* report, int* out) {
  NC_REQUIRE(report);
  NC_REQUIRE_OUT(out);
  *out = report->result.report.resource_abort ? 1 : 0;
  if (*out) g_last_error = *report->result.report.resource_abort;
  return NC_OK;
}

void nc_report_free(nc_report* report) { delete report; }

nc_status nc_certificate_parse(const char* text, nc_certificate** out) {
  NC_REQUIRE_OUT(out);
  if (!text) return fail(NC_ERR_INVALID_ARGUMENT, "null certificate text");
  return guarded([&] { *out = new nc_certificate{nulla::parse_certificate(text)}; });
}

nc_status nc_certificate_serialize(const nc_certificate* cert, char** out) {
  NC_REQUIRE(cert);
  NC_REQUIRE_OUT(out);
  return guarded([&] { *out = dup_string(nulla::serialize_certificate(cert->cert)); });
}

nc_status nc_certificate_degree(const nc_certificate* cert, unsigned* out) {
  NC_REQUIRE(cert);
  NC_REQUIRE_OUT(out);
  *out = cert->cert.degree;
  return NC_OK;
}

void nc_certificate_free(nc_certificate* cert) { delete cert; }

nc_status nc_verify(const nc_task* task, const nc_certificate* cert, int* ok, char** diagnostic) {
  NC_REQUIRE(task);
  NC_REQUIRE(cert);
  NC_REQUIRE_OUT(ok);
  if (diagnostic) *diagnostic = nullptr;
  return guarded([&] {
    const auto result = repro::verify_task_certificate(task->task, cert->cert);
    *ok = result.ok ? 1 : 0;
    if (!result.ok && diagnostic) *diagnostic = dup_string(result.diagnostic);
  });
}

nc_status nc_bounds_json(unsigned n, unsigned m, unsigned modes, unsigned herald_modes, unsigned max_degree,
                         char** out) {
  NC_REQUIRE_OUT(out);
  return guarded([&] {
    auto p = bounds::scaling_profile({n, m, modes, herald_modes}, max_degree);
    *out = dup_string(profile_json(p).dump(2) + "\n");
  });
}

nc_status nc_bounds_text(unsigned n, unsigned m, unsigned modes, unsigned herald_modes, unsigned max_degree,
                         char** out) {
  NC_REQUIRE_OUT(out);
  return guarded([&] {
    *out = dup_string(bounds::format_profile(bounds::scaling_profile({n, m, modes, herald_modes}, max_degree)));
  });
}

nc_status nc_random_target(unsigned photons, unsigned modes, uint64_t seed, uint64_t denom_bound, char** out) {
  NC_REQUIRE_OUT(out);
  return guarded([&] {
    *out = dup_string(fock::serialize_state(fock::haar_random_target(photons, modes, seed, denom_bound)) + "\n");
  });
}

void nc_reproduce_options_default(nc_reproduce_options* out) {
  if (!out) return;
  const repro::ReproduceConfig d;
  out->samples = 0;
  out->seed = d.seed;
  out->max_degree = -1;
  out->extended = 0;
  out->workers = 1;
  try {
    out->memory_budget = repro::default_memory_budget();
  } catch (const std::exception&) {
    out->memory_budget = nulla::kDefaultMemoryBudget;
  }
  out->out_dir = nullptr;
}

nc_status nc_reproduce(const char* suite, const nc_reproduce_options* options, char** json_out) {
  NC_REQUIRE_OUT(json_out);
  nc_reproduce_options o;
  if (options)
    o = *options;
  else
    nc_reproduce_options_default(&o);
  return guarded([&] {
    repro::ReproduceConfig cfg;
    if (suite) cfg.suite = suite;
    if (o.samples) cfg.samples = o.samples;
    cfg.seed = o.seed;
    if (o.max_degree >= 0) cfg.max_degree = static_cast<unsigned>(o.max_degree);
    cfg.extended = o.extended != 0;
    cfg.workers = o.workers;
    cfg.memory_budget = o.memory_budget;
    if (o.out_dir) cfg.out_dir = o.out_dir;
    *json_out = dup_string(repro::run_reproduce(cfg).dump(2) + "\n");
  });
}

}  // extern "C"
