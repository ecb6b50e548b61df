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

// Nullstellensatz certificate search.
//
// A certificate is a list of multipliers beta_k with sum_k beta_k f_k = 1,
// which rules out any common zero of the f_k. For a degree d the unknown
// coefficients of every beta_k solve a sparse linear system; d is raised
// until the system is consistent or the cap is hit.
//
// Degree of a multiplier monomial gamma^t * m, where m has matrix-entry
// degree a and the equation has weight w (matrix degree minus n times gamma
// degree, zero for every target equation):
//   matrix measure: max(a, n*t - w), so gamma counts like the n matrix
//                   entries it balances;
//   total measure:  a + t.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algebra/multipoly.hpp"
#include "compiler/compiler.hpp"
#include "fock/state.hpp"
#include "linsolve/linsolve.hpp"

namespace nullcert::nulla {

using algebra::ExponentTuple;
using algebra::GaussianRational;
using algebra::MultiPoly;
using algebra::VariableSpacePtr;
using compiler::PolynomialSystem;

enum class DegreeMeasure { matrix, total };
std::string to_string(DegreeMeasure m);
DegreeMeasure parse_degree_measure(std::string_view text);

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{2} << 30;

struct CertificateSearchOptions {
  unsigned max_degree = 4;
  bool gamma_in_beta = true;
  bool w_grading = true;
  fock::Arithmetic arithmetic = fock::Arithmetic::exact;
  double float_tol = 1e-9;
  std::size_t memory_budget = kDefaultMemoryBudget;  // 0 = unlimited
  DegreeMeasure measure = DegreeMeasure::matrix;

  void validate() const;  // throws ContractViolation
  std::string summary() const;
};

struct SparseLinearSystem {
  unsigned degree = 0;
  linsolve::SparseMatrix matrix;
  std::vector<GaussianRational> rhs;          // 1 at the constant row, else 0
  std::vector<ExponentTuple> row_monomials;   // graded order; row 0 is the constant
  struct Column {
    std::size_t equation;
    ExponentTuple monomial;
  };
  std::vector<Column> columns;
};

// Multiplier monomials allowed for equation `k` at degree d, sorted.
std::vector<ExponentTuple> multiplier_basis(const PolynomialSystem& ps, std::size_t k, unsigned d,
                                            const CertificateSearchOptions& opts);
unsigned monomial_degree(const PolynomialSystem& ps, std::size_t k, const ExponentTuple& e, DegreeMeasure measure);

// Throws ResourceError if the projected entry count exceeds the budget.
SparseLinearSystem assemble(const PolynomialSystem& ps, unsigned d, const CertificateSearchOptions& opts);

struct Certificate {
  VariableSpacePtr space;
  unsigned degree = 0;        // under `measure`
  unsigned total_degree = 0;  // max total degree over all beta_k
  DegreeMeasure measure = DegreeMeasure::matrix;
  std::string task_digest;
  std::string options;
  std::vector<MultiPoly> betas;
};

struct DegreeOutcome {
  enum class Kind { certificate, none, unchanged, numeric_candidate };
  unsigned degree = 0;
  Kind outcome = Kind::none;
  std::size_t columns = 0;
  std::size_t rows = 0;
  std::size_t nonzeros = 0;
  std::size_t pivots = 0;
  std::size_t fill_in = 0;
  double elapsed_seconds = 0.0;
  std::optional<double> residual;  // float mode
};
std::string to_string(DegreeOutcome::Kind k);

enum class Verdict { infeasible_proven, undecided, feasible_proven };
std::string to_string(Verdict v);

struct NullaReport {
  CertificateSearchOptions options;
  std::vector<DegreeOutcome> degrees;
  Verdict verdict = Verdict::undecided;
  std::optional<unsigned> searched_degree;  // highest degree fully decided
  std::optional<Certificate> certificate;
  std::optional<std::string> resource_abort;
  std::optional<std::string> degree_bound;  // decimal, when one applies
  std::optional<std::string> note;
};

// One degree: solve, rebuild the multipliers, and verify the identity
// symbolically. A solver success that fails verification throws
// InternalError.
std::optional<Certificate> find_certificate(const PolynomialSystem& ps, unsigned d,
                                            const CertificateSearchOptions& opts, DegreeOutcome* stats = nullptr);

// Degrees 0..max_degree, stopping at the first certificate. Resource aborts
// end the search and are recorded in the report.
NullaReport certify(const PolynomialSystem& ps, const CertificateSearchOptions& opts);

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;
};

// Recomputes sum_k beta_k f_k exactly and compares it to 1.
VerifyResult verify_certificate(const PolynomialSystem& ps, const Certificate& cert);

std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

}  // namespace nullcert::nulla
