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

#include "repro/pipeline.hpp"

#include <cctype>
#include <cstdlib>

#include "util/digest.hpp"
#include "util/error.hpp"

namespace nullcert::repro {

std::string task_digest(const fock::AnyTask& task) {
  if (const auto* t = std::get_if<fock::TaskSpec>(&task)) return util::sha256_hex(fock::serialize_task(*t));
  return util::sha256_hex(fock::serialize_multi_task(std::get<fock::MultiTaskSpec>(task)));
}

compiler::PolynomialSystem compile_any(const fock::AnyTask& task) {
  if (const auto* t = std::get_if<fock::TaskSpec>(&task)) return compiler::compile_task(fock::validate_task(*t));
  return compiler::build_multi_system(fock::validate_multi_task(std::get<fock::MultiTaskSpec>(task)));
}

CertifyResult certify_task(const fock::AnyTask& task, const nulla::CertificateSearchOptions& opts) {
  CertifyResult out{compile_any(task), {}, task_digest(task)};
  out.report = nulla::certify(out.system, opts);
  if (out.report.certificate) out.report.certificate->task_digest = out.digest;
  return out;
}

nulla::VerifyResult verify_task_certificate(const fock::AnyTask& task, const nulla::Certificate& cert) {
  const auto digest = task_digest(task);
  if (!cert.task_digest.empty() && cert.task_digest != digest)
    return {false, "certificate was issued for task digest " + cert.task_digest + ", this task has " + digest};
  return nulla::verify_certificate(compile_any(task), cert);
}

std::size_t parse_memory_size(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw ContractViolation("malformed memory size '" + text + "'");
  }
  std::string suffix = text.substr(pos);
  for (auto& c : suffix) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (!suffix.empty() && suffix.back() == 'B') suffix.pop_back();
  if (!suffix.empty() && suffix.back() == 'I') suffix.pop_back();
  unsigned shift = 0;
  if (suffix == "K") shift = 10;
  else if (suffix == "M") shift = 20;
  else if (suffix == "G") shift = 30;
  else if (!suffix.empty()) throw ContractViolation("unknown memory size suffix in '" + text + "'");
  return static_cast<std::size_t>(value) << shift;
}

std::size_t default_memory_budget() {
  if (const char* env = std::getenv("NULLA_MEMORY_BUDGET"); env && *env) return parse_memory_size(env);
  return nulla::kDefaultMemoryBudget;
}

}  // namespace nullcert::repro
