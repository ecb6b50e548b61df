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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "algebra/monomial.hpp"
#include "algebra/scalar.hpp"

namespace nullcert::algebra {

// Sparse polynomial over Q(i). Zero coefficients are never stored, so the
// zero polynomial is the empty map.
class MultiPoly {
 public:
  using Terms = std::map<ExponentTuple, GaussianRational, GradedLess>;

  explicit MultiPoly(VariableSpacePtr space);

  static MultiPoly constant(VariableSpacePtr space, const GaussianRational& c);
  static MultiPoly variable(VariableSpacePtr space, std::size_t index);

  const VariableSpacePtr& space() const noexcept { return space_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Total degree; nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  GaussianRational coefficient(const ExponentTuple& e) const;
  GaussianRational constant_term() const;

  // Adds c to the coefficient of e, dropping the term if it cancels.
  void add_term(const ExponentTuple& e, const GaussianRational& c);

  bool is_homogeneous() const;
  // Weight of a monomial: matrix-entry degree - photons * gamma degree.
  // Returns the common weight if every term shares one.
  std::optional<long> weight(unsigned photons) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const GaussianRational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const GaussianRational& c) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);

  // "coeff @ e1 e2 ... ; coeff @ ..." in graded order; "0" for zero.
  std::string to_string() const;
  static MultiPoly parse(VariableSpacePtr space, std::string_view text);

 private:
  void require_same_space(const MultiPoly& o) const;

  VariableSpacePtr space_;
  Terms terms_;
};

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);

// Exact evaluation. `assignment[k]` is the value of variable k; variables
// that do not occur in p may be left empty.
GaussianRational poly_eval(const MultiPoly& p, std::span<const std::optional<GaussianRational>> assignment);

std::size_t gamma_degree(const VariableSpace& vs, const ExponentTuple& e);
std::size_t matrix_degree(const VariableSpace& vs, const ExponentTuple& e);

}  // namespace nullcert::algebra
