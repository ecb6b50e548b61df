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

// Sparse linear systems over Q(i): exact consistency by elimination, and a
// floating least-squares screen.

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra/scalar.hpp"

namespace nullcert::linsolve {

using algebra::GaussianRational;

struct Triplet {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  GaussianRational value;
};

// Row-major storage with a column pattern kept alongside. Duplicate
// coordinates are summed at construction and zeros dropped.
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, GaussianRational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_.size(); }
  std::size_t nnz() const noexcept { return nnz_; }

  // Entries of row r sorted by column.
  const std::vector<Entry>& row(std::size_t r) const { return rows_.at(r); }
  // Rows with an entry in column c, ascending.
  const std::vector<std::uint32_t>& column(std::size_t c) const { return cols_.at(c); }

  std::vector<Triplet> triplets() const;
  std::vector<GaussianRational> multiply(const std::vector<GaussianRational>& x) const;
  // y^T M
  std::vector<GaussianRational> left_multiply(const std::vector<GaussianRational>& y) const;

 private:
  std::vector<std::vector<Entry>> rows_;
  std::vector<std::vector<std::uint32_t>> cols_;
  std::size_t nnz_ = 0;
};

struct SolveStats {
  std::size_t pivots = 0;
  std::size_t fill_in = 0;    // entries created by elimination
  std::size_t peak_nnz = 0;
  double elapsed_seconds = 0.0;
};

struct SolveOptions {
  // Upper bound on the working set, in bytes; 0 disables the check.
  std::size_t memory_budget = 0;
  // Keep enough history to express an inconsistent row as a combination of
  // the original rows.
  bool record_witness = true;
};

struct SolveOutcome {
  enum class Status { consistent, inconsistent };
  Status status = Status::consistent;
  std::vector<GaussianRational> solution;  // consistent only; free variables are zero
  // Inconsistent only: the original row that reduced to 0 = witness_rhs,
  // and (when recorded) weights y over the original rows with y^T M = 0 and
  // y^T b = witness_rhs.
  std::size_t witness_row = 0;
  GaussianRational witness_rhs;
  std::map<std::size_t, GaussianRational> witness_combination;
  SolveStats stats;

  bool consistent() const noexcept { return status == Status::consistent; }
};

// Bytes charged per stored entry against SolveOptions::memory_budget.
inline constexpr std::size_t kBytesPerEntry = 160;

// Throws ResourceError when the working set would exceed the budget.
SolveOutcome solve_exact(const SparseMatrix& m, const std::vector<GaussianRational>& b,
                         const SolveOptions& options = {});

struct FloatOutcome {
  std::vector<std::complex<double>> solution;
  double residual = 0.0;  // ||M x - b||_2, infinity when the iteration failed
  long iterations = 0;
  bool converged = false;
  bool consistent_at_tol = false;  // residual <= tol
};

FloatOutcome solve_float(const SparseMatrix& m, const std::vector<GaussianRational>& b, double tol);

// "rows cols nnz" then one "row col value" line per entry.
std::string dump_matrix(const SparseMatrix& m);
SparseMatrix parse_matrix(std::string_view text);

}  // namespace nullcert::linsolve
