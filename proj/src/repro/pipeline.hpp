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

#pragma once

// End-to-end steps shared by the C layer and the reproduction suite:
// validate, compile, certify, verify.

#include <optional>
#include <string>

#include "compiler/compiler.hpp"
#include "fock/task.hpp"
#include "nulla/nulla.hpp"

namespace nullcert::repro {

// SHA-256 over the canonical serialization of the task.
std::string task_digest(const fock::AnyTask& task);

// Validates and compiles either task kind.
compiler::PolynomialSystem compile_any(const fock::AnyTask& task);

struct CertifyResult {
  compiler::PolynomialSystem system;
  nulla::NullaReport report;  // certificate, when present, carries the digest
  std::string digest;
};

CertifyResult certify_task(const fock::AnyTask& task, const nulla::CertificateSearchOptions& opts);

// Symbolic check against the recompiled task, plus a digest comparison
// when the certificate records one.
nulla::VerifyResult verify_task_certificate(const fock::AnyTask& task, const nulla::Certificate& cert);

// Default memory budget: NULLA_MEMORY_BUDGET when set (bytes, with an
// optional K/M/G suffix), else 2 GiB.
std::size_t default_memory_budget();
std::size_t parse_memory_size(const std::string& text);

}  // namespace nullcert::repro
