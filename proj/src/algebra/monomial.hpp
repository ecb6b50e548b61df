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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nullcert::algebra {

// A polynomial variable: either a transfer-matrix entry A[row][col]
// (0-based, printed 1-based) or the inverse success amplitude gamma.
struct Variable {
  enum class Kind { matrix_entry, gamma };
  Kind kind = Kind::matrix_entry;
  unsigned row = 0;
  unsigned col = 0;

  static Variable entry(unsigned row, unsigned col) { return {Kind::matrix_entry, row, col}; }
  static Variable gamma() { return {Kind::gamma, 0, 0}; }

  bool is_gamma() const noexcept { return kind == Kind::gamma; }
  std::string name() const;
  friend bool operator==(const Variable&, const Variable&) = default;
};

// Fixed, immutable variable order shared by every polynomial of a system.
// Matrix entries are unique; gamma, when present, is the last variable.
class VariableSpace {
 public:
  static std::shared_ptr<const VariableSpace> make(std::vector<Variable> vars);
  // Entries A[r][c] for every r in `rows` (ascending) and c < cols, then gamma.
  static std::shared_ptr<const VariableSpace> matrix(std::span<const unsigned> rows, unsigned cols,
                                                     bool with_gamma);

  std::size_t size() const noexcept { return vars_.size(); }
  const Variable& operator[](std::size_t k) const { return vars_[k]; }
  const std::vector<Variable>& variables() const noexcept { return vars_; }

  bool has_gamma() const noexcept { return has_gamma_; }
  std::size_t gamma_index() const;
  std::size_t matrix_entry_count() const noexcept { return vars_.size() - (has_gamma_ ? 1 : 0); }
  std::optional<std::size_t> index_of(unsigned row, unsigned col) const;

  friend bool operator==(const VariableSpace& a, const VariableSpace& b) { return a.vars_ == b.vars_; }

 private:
  explicit VariableSpace(std::vector<Variable> vars);
  std::vector<Variable> vars_;
  bool has_gamma_ = false;
};

using VariableSpacePtr = std::shared_ptr<const VariableSpace>;

// Exponent vector in variable order with a cached total degree.
class ExponentTuple {
 public:
  using Exponent = std::uint16_t;

  ExponentTuple() = default;
  explicit ExponentTuple(std::size_t size) : exps_(size, 0) {}
  explicit ExponentTuple(std::vector<Exponent> exps);

  std::size_t size() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept { return degree_; }
  Exponent operator[](std::size_t k) const { return exps_[k]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  void set(std::size_t k, Exponent value);
  void increment(std::size_t k, Exponent by = 1);

  // Componentwise sum; sizes must agree.
  ExponentTuple operator+(const ExponentTuple& other) const;
  bool divides(const ExponentTuple& other) const;

  // Space separated, in variable order.
  std::string to_string() const;
  static ExponentTuple parse(std::string_view text, std::size_t expected_size);

  friend bool operator==(const ExponentTuple& a, const ExponentTuple& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  std::vector<Exponent> exps_;
  unsigned degree_ = 0;
};

// Graded reverse-lexicographic order: lower degree first; on a tie the tuple
// with the larger exponent in the last differing variable is smaller.
std::strong_ordering graded_compare(const ExponentTuple& a, const ExponentTuple& b);

struct GradedLess {
  bool operator()(const ExponentTuple& a, const ExponentTuple& b) const {
    return graded_compare(a, b) < 0;
  }
};

struct ExponentHash {
  std::size_t operator()(const ExponentTuple& t) const noexcept;
};

enum class EnumerationMode { up_to, exact, w_graded };

// All monomials of the requested shape, sorted by the graded order.
// w_graded keeps tuples with matrix-entry degree == photons * gamma degree
// and total degree <= degree; it requires gamma in the space.
// Throws ResourceError if the count cannot be materialized.
std::vector<ExponentTuple> enumerate_monomials(const VariableSpace& vs, unsigned degree,
                                               EnumerationMode mode, unsigned photons = 0);

// Calls `visit` for every exponent vector of length `parts` summing to
// `total`, in a fixed order. Shared by enumeration and by the basis builders.
void for_each_composition(std::size_t parts, unsigned total,
                          const std::function<void(const std::vector<ExponentTuple::Exponent>&)>& visit);

}  // namespace nullcert::algebra
