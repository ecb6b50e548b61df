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

// Exact sparse elimination over Q(i).
//
// Pivot: the column with the fewest active rows, then within it the active
// row with the fewest entries, ties to the lowest index. The pivot row is
// scaled to a unit pivot, frozen, and the pivot column is cleared from every
// other active row. A row that empties while its right-hand side does not
// proves inconsistency; otherwise back-substitution with free variables at
// zero gives a solution.

#include <algorithm>
#include <chrono>
#include <set>

#include "linsolve/linsolve.hpp"
#include "util/error.hpp"

namespace nullcert::linsolve {

namespace {

using Entry = SparseMatrix::Entry;

struct Pivot {
  std::uint32_t row;
  std::uint32_t col;
  GaussianRational scale;  // reciprocal of the pivot value
};

struct WorkRow {
  std::vector<Entry> entries;
  GaussianRational rhs;
  bool active = true;
  std::vector<std::pair<std::uint32_t, GaussianRational>> ops;  // (pivot index, factor)
};

class Eliminator {
 public:
  Eliminator(const SparseMatrix& m, const std::vector<GaussianRational>& b, const SolveOptions& opts)
      : m_(m), opts_(opts), rows_(m.rows()), col_rows_(m.cols()), stamp_(m.cols(), 0) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      rows_[r].entries = m.row(r);
      rows_[r].rhs = b[r];
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      col_rows_[c] = m.column(c);
      if (!col_rows_[c].empty()) queue_.emplace(col_rows_[c].size(), c);
    }
    nnz_ = peak_ = m.nnz();
  }

  SolveOutcome run() {
    const auto start = std::chrono::steady_clock::now();
    SolveOutcome out;
    std::optional<std::size_t> witness;
    for (std::size_t r = 0; r < rows_.size() && !witness; ++r)
      if (rows_[r].entries.empty() && !rows_[r].rhs.is_zero()) witness = r;
    while (!witness && !queue_.empty()) {
      witness = step();
      check_budget();
    }
    if (witness) {
      out.status = SolveOutcome::Status::inconsistent;
      out.witness_row = *witness;
      out.witness_rhs = rows_[*witness].rhs;
      if (opts_.record_witness) out.witness_combination = combination(*witness);
    } else {
      out.status = SolveOutcome::Status::consistent;
      out.solution = back_substitute();
    }
    out.stats.pivots = pivots_.size();
    out.stats.fill_in = fill_in_;
    out.stats.peak_nnz = peak_;
    out.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  }

 private:
  // Takes column c out of the count queue until the end of the step.
  void touch(std::uint32_t c) {
    if (stamp_[c] == epoch_) return;
    stamp_[c] = epoch_;
    if (!col_rows_[c].empty()) queue_.erase({col_rows_[c].size(), c});
    touched_.push_back(c);
  }

  static void remove_row(std::vector<std::uint32_t>& list, std::uint32_t r) {
    auto it = std::find(list.begin(), list.end(), r);
    if (it != list.end()) {
      *it = list.back();
      list.pop_back();
    }
  }

  std::optional<std::size_t> step() {
    ++epoch_;
    touched_.clear();
    const std::uint32_t c = queue_.begin()->second;

    std::uint32_t p = col_rows_[c].front();
    for (std::uint32_t r : col_rows_[c]) {
      const auto sr = rows_[r].entries.size(), sp = rows_[p].entries.size();
      if (sr < sp || (sr == sp && r < p)) p = r;
    }

    WorkRow& prow = rows_[p];
    auto pit = std::lower_bound(prow.entries.begin(), prow.entries.end(), c,
                                [](const Entry& e, std::uint32_t col) { return e.first < col; });
    const GaussianRational scale = pit->second.inverse();
    for (auto& [j, v] : prow.entries) v *= scale;
    pit->second = GaussianRational(1);
    prow.rhs *= scale;
    prow.active = false;
    const auto pivot_index = static_cast<std::uint32_t>(pivots_.size());
    pivots_.push_back({p, c, scale});

    for (const auto& [j, v] : prow.entries) {
      touch(j);
      remove_row(col_rows_[j], p);
    }

    const std::vector<std::uint32_t> targets = col_rows_[c];
    std::optional<std::size_t> witness;
    for (std::uint32_t q : targets) {
      eliminate(q, prow, c);
      if (opts_.record_witness) rows_[q].ops.emplace_back(pivot_index, last_factor_);
      if (!witness && rows_[q].entries.empty() && !rows_[q].rhs.is_zero()) witness = q;
    }
    col_rows_[c].clear();

    for (std::uint32_t j : touched_)
      if (!col_rows_[j].empty()) queue_.emplace(col_rows_[j].size(), j);
    return witness;
  }

  // row q -= q[c] * pivot row, keeping the column lists current.
  void eliminate(std::uint32_t q, const WorkRow& prow, std::uint32_t c) {
    WorkRow& row = rows_[q];
    auto qit = std::lower_bound(row.entries.begin(), row.entries.end(), c,
                                [](const Entry& e, std::uint32_t col) { return e.first < col; });
    const GaussianRational factor = qit->second;
    last_factor_ = factor;

    std::vector<Entry> merged;
    merged.reserve(row.entries.size() + prow.entries.size());
    auto a = row.entries.begin();
    auto b = prow.entries.begin();
    const std::size_t before = row.entries.size();
    while (a != row.entries.end() || b != prow.entries.end()) {
      if (b == prow.entries.end() || (a != row.entries.end() && a->first < b->first)) {
        merged.push_back(std::move(*a++));
        continue;
      }
      const std::uint32_t j = b->first;
      if (a == row.entries.end() || b->first < a->first) {
        // Fill-in: the row gains column j.
        GaussianRational v;
        v.sub_mul(factor, b->second);
        merged.emplace_back(j, std::move(v));
        col_rows_[j].push_back(q);
        ++fill_in_;
        ++b;
        continue;
      }
      GaussianRational v = std::move(a->second);
      v.sub_mul(factor, b->second);
      ++a;
      ++b;
      if (j == c || v.is_zero()) {
        if (j != c) remove_row(col_rows_[j], q);
        continue;
      }
      merged.emplace_back(j, std::move(v));
    }
    row.rhs.sub_mul(factor, prow.rhs);
    row.entries = std::move(merged);
    nnz_ = nnz_ + row.entries.size() - before;
    peak_ = std::max(peak_, nnz_);
  }

  void check_budget() const {
    if (opts_.memory_budget == 0) return;
    if (nnz_ * kBytesPerEntry > opts_.memory_budget)
      throw ResourceError("elimination working set of " + std::to_string(nnz_) + " entries exceeds the " +
                              std::to_string(opts_.memory_budget) + "-byte budget",
                          "pivots=" + std::to_string(pivots_.size()) + " nnz=" + std::to_string(nnz_) +
                              " fill_in=" + std::to_string(fill_in_));
  }

  std::vector<GaussianRational> back_substitute() const {
    std::vector<GaussianRational> x(m_.cols());
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const WorkRow& row = rows_[it->row];
      GaussianRational v = row.rhs;
      for (const auto& [j, a] : row.entries)
        if (j != it->col && !x[j].is_zero()) v.sub_mul(a, x[j]);
      x[it->col] = std::move(v);
    }
    return x;
  }

  // Original-row weights reproducing the current state of row r.
  std::map<std::size_t, GaussianRational> combination(std::size_t r) const {
    using Comb = std::map<std::size_t, GaussianRational>;
    auto axpy = [](Comb& into, const Comb& from, const GaussianRational& f) {
      for (const auto& [k, v] : from) {
        auto& slot = into[k];
        slot.sub_mul(f, v);
        if (slot.is_zero()) into.erase(k);
      }
    };
    std::uint32_t needed = 0;
    for (const auto& [k, f] : rows_[r].ops) needed = std::max(needed, k + 1);
    std::vector<Comb> pivot_comb(needed);
    for (std::uint32_t k = 0; k < needed; ++k) {
      const auto& pv = pivots_[k];
      Comb comb{{pv.row, GaussianRational(1)}};
      for (const auto& [i, f] : rows_[pv.row].ops) axpy(comb, pivot_comb[i], f);
      for (auto& [idx, v] : comb) v *= pv.scale;
      pivot_comb[k] = std::move(comb);
    }
    Comb out{{r, GaussianRational(1)}};
    for (const auto& [i, f] : rows_[r].ops) axpy(out, pivot_comb[i], f);
    return out;
  }

  const SparseMatrix& m_;
  SolveOptions opts_;
  std::vector<WorkRow> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::set<std::pair<std::size_t, std::uint32_t>> queue_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<std::uint32_t> touched_;
  std::vector<Pivot> pivots_;
  GaussianRational last_factor_;
  std::size_t nnz_ = 0;
  std::size_t peak_ = 0;
  std::size_t fill_in_ = 0;
};

}  // namespace

SolveOutcome solve_exact(const SparseMatrix& m, const std::vector<GaussianRational>& b, const SolveOptions& options) {
  if (b.size() != m.rows())
    throw ContractViolation("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                            std::to_string(m.rows()) + " rows");
  if (options.memory_budget != 0 && m.nnz() * kBytesPerEntry > options.memory_budget)
    throw ResourceError("matrix with " + std::to_string(m.nnz()) + " entries exceeds the " +
                            std::to_string(options.memory_budget) + "-byte budget",
                        "pivots=0 nnz=" + std::to_string(m.nnz()));
  return Eliminator(m, b, options).run();
}

}  // namespace nullcert::linsolve
