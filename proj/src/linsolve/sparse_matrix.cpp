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

#include <algorithm>
#include <charconv>
#include <sstream>

#include "linsolve/linsolve.hpp"
#include "util/error.hpp"

namespace nullcert::linsolve {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets)
    : rows_(rows), cols_(cols) {
  std::sort(triplets.begin(), triplets.end(),
            [](const Triplet& a, const Triplet& b) { return a.row != b.row ? a.row < b.row : a.col < b.col; });
  for (auto& t : triplets) {
    if (t.row >= rows || t.col >= cols)
      throw ContractViolation("matrix entry (" + std::to_string(t.row) + ", " + std::to_string(t.col) +
                              ") outside a " + std::to_string(rows) + " x " + std::to_string(cols) + " matrix");
    auto& row = rows_[t.row];
    if (!row.empty() && row.back().first == t.col)
      row.back().second += t.value;
    else
      row.emplace_back(t.col, std::move(t.value));
  }
  for (std::size_t r = 0; r < rows; ++r) {
    auto& row = rows_[r];
    std::erase_if(row, [](const Entry& e) { return e.second.is_zero(); });
    for (const auto& [c, v] : row) cols_[c].push_back(static_cast<std::uint32_t>(r));
    nnz_ += row.size();
  }
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) out.push_back({static_cast<std::uint32_t>(r), c, v});
  return out;
}

std::vector<GaussianRational> SparseMatrix::multiply(const std::vector<GaussianRational>& x) const {
  if (x.size() != cols()) throw ContractViolation("vector length does not match the column count");
  std::vector<GaussianRational> out(rows());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r])
      if (!x[c].is_zero()) out[r] += v * x[c];
  return out;
}

std::vector<GaussianRational> SparseMatrix::left_multiply(const std::vector<GaussianRational>& y) const {
  if (y.size() != rows()) throw ContractViolation("vector length does not match the row count");
  std::vector<GaussianRational> out(cols());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (y[r].is_zero()) continue;
    for (const auto& [c, v] : rows_[r]) out[c] += y[r] * v;
  }
  return out;
}

std::string dump_matrix(const SparseMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) out << r << ' ' << c << ' ' << v.to_string() << "\n";
  return out.str();
}

SparseMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty matrix dump", 1, 1);
  std::size_t rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream header(line);
    if (!(header >> rows >> cols >> nnz)) throw ParseError("expected 'rows cols nnz'", line_no, 1);
  }
  std::vector<Triplet> triplets;
  triplets.reserve(nnz);
  for (std::size_t k = 0; k < nnz; ++k) {
    if (!next_line()) throw ParseError("matrix dump ends after " + std::to_string(k) + " entries", line_no, 1);
    std::istringstream entry(line);
    std::uint32_t r = 0, c = 0;
    std::string value;
    if (!(entry >> r >> c >> value)) throw ParseError("expected 'row col value'", line_no, 1);
    try {
      triplets.push_back({r, c, GaussianRational::parse(value)});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }
  if (next_line()) throw ParseError("trailing data after the declared entries", line_no, 1);
  try {
    return SparseMatrix(rows, cols, std::move(triplets));
  } catch (const ContractViolation& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

}  // namespace nullcert::linsolve
