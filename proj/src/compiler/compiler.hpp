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

// Task -> polynomial system.
//
// The input state is pushed through an unknown linear map
// a_i^dagger -> sum_j A[i][j] a_j^dagger, the heralded modes are projected
// onto their measured pattern, and every output monomial yields one equation
// gamma * g_k(A) - q_k = 0. Overall positive constants (1/sqrt(n_i!) and
// 1/prod m_i!) are dropped because gamma absorbs them.

#include <map>
#include <string>
#include <vector>

#include "algebra/multipoly.hpp"
#include "fock/task.hpp"

namespace nullcert::compiler {

using algebra::GaussianRational;
using algebra::MultiPoly;
using algebra::VariableSpacePtr;
using fock::OccupationVector;
using fock::PureState;

// Output occupation -> coefficient polynomial in the A-entries.
struct OutputExpansion {
  VariableSpacePtr space;
  std::size_t modes = 0;
  unsigned photons = 0;
  // Geometry before heralding; equal to modes/photons until projected.
  std::size_t input_modes = 0;
  unsigned input_photons = 0;
  std::map<OccupationVector, MultiPoly> coefficients;
};

OutputExpansion expand_evolution(const PureState& input, const VariableSpacePtr& space);

// Keeps the output occupations whose last pattern.modes() entries equal the
// pattern and strips those entries. An empty pattern is the identity.
OutputExpansion herald_project(const OutputExpansion& expansion, const OccupationVector& pattern);

struct EquationTag {
  enum class Kind { target, suppression };
  Kind kind = Kind::target;
  std::size_t source = 0;    // pair index or suppression index
  OccupationVector monomial;  // output occupation over the unheralded modes
  std::string to_string() const;
};

struct Equation {
  MultiPoly poly;
  EquationTag tag;
};

struct PolynomialSystem {
  VariableSpacePtr space;
  std::vector<Equation> equations;
  unsigned photons = 0;      // n of the gamma-form equations
  unsigned max_photons = 0;  // largest photon number over every input
  unsigned herald_photons = 0;
  std::size_t modes = 0;
  std::size_t herald_modes = 0;
  std::size_t pairs = 1;
  std::size_t suppressions = 0;
  std::size_t emitted = 0;   // before pruning
  std::size_t pruned = 0;

  std::size_t size() const noexcept { return equations.size(); }
};

// One gamma-form equation per occupation of `heralded.photons` photons over
// its modes, in Fock-basis order; 0 = 0 equations are pruned and counted.
// Appends to `out`, whose space must match.
void append_target_equations(PolynomialSystem& out, const OutputExpansion& heralded, const PureState& target,
                             std::size_t pair_index);

PolynomialSystem build_system(const OutputExpansion& heralded, const PureState& target);
PolynomialSystem compile_task(const fock::ValidatedTask& task);
PolynomialSystem build_multi_system(const fock::ValidatedMultiTask& task);

// Text artifact: variable table then one tagged equation per line.
std::string serialize_system(const PolynomialSystem& system);

// Exact permanent by Ryser's formula with Gray-code updates. Dimension <= 12.
GaussianRational ryser_permanent(const std::vector<std::vector<GaussianRational>>& matrix);

}  // namespace nullcert::compiler
