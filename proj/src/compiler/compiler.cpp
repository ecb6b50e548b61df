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

#include "compiler/compiler.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "util/error.hpp"

namespace nullcert::compiler {

namespace {

using algebra::ExponentTuple;

// p * x_k, by shifting every exponent.
MultiPoly times_variable(const MultiPoly& p, std::size_t k) {
  MultiPoly out(p.space());
  for (const auto& [e, c] : p.terms()) {
    ExponentTuple shifted = e;
    shifted.increment(k);
    out.add_term(shifted, c);
  }
  return out;
}

void accumulate(std::map<OccupationVector, MultiPoly>& into, const OccupationVector& key, const MultiPoly& p) {
  if (p.is_zero()) return;
  auto it = into.find(key);
  if (it == into.end()) {
    into.emplace(key, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) into.erase(it);
}

void expand_term(const OccupationVector& occ, const GaussianRational& amp, const VariableSpacePtr& space,
                 std::map<OccupationVector, MultiPoly>& out) {
  const std::size_t modes = occ.modes();
  std::map<OccupationVector, MultiPoly> current;
  current.emplace(OccupationVector::vacuum(modes), MultiPoly::constant(space, amp));
  for (std::size_t row = 0; row < modes; ++row) {
    if (occ[row] == 0) continue;
    std::vector<std::size_t> column_vars(modes);
    for (std::size_t col = 0; col < modes; ++col) {
      auto idx = space->index_of(static_cast<unsigned>(row), static_cast<unsigned>(col));
      if (!idx)
        throw ContractViolation("variable space lacks A_" + std::to_string(row + 1) + "_" + std::to_string(col + 1));
      column_vars[col] = *idx;
    }
    for (unsigned rep = 0; rep < occ[row]; ++rep) {
      std::map<OccupationVector, MultiPoly> next;
      for (const auto& [key, poly] : current)
        for (std::size_t col = 0; col < modes; ++col)
          accumulate(next, key.with_added(col), times_variable(poly, column_vars[col]));
      current = std::move(next);
    }
  }
  for (const auto& [key, poly] : current) accumulate(out, key, poly);
}

void check_gamma_form(const MultiPoly& f, const MultiPoly& g, unsigned photons) {
  if (!g.is_zero() && (!g.is_homogeneous() || *g.degree() != photons))
    throw InternalError("coefficient polynomial is not homogeneous of degree " + std::to_string(photons));
  if (auto w = f.weight(photons); !f.is_zero() && (!w || *w != 0))
    throw InternalError("compiled equation is not of weight zero");
}

}  // namespace

std::string EquationTag::to_string() const {
  std::string out = kind == Kind::target ? "pair " : "suppression ";
  out += std::to_string(source);
  out += " [";
  out += monomial.to_string();
  out += "]";
  return out;
}

OutputExpansion expand_evolution(const PureState& input, const VariableSpacePtr& space) {
  if (input.photons() == 0) throw ContractViolation("input carries no photons");
  if (!space) throw ContractViolation("missing variable space");
  OutputExpansion out;
  out.space = space;
  out.modes = out.input_modes = input.modes();
  out.photons = out.input_photons = input.photons();
  for (const auto& [occ, amp] : input.terms())
    expand_term(occ, PureState::exact_amplitude(amp), space, out.coefficients);
  return out;
}

OutputExpansion herald_project(const OutputExpansion& expansion, const OccupationVector& pattern) {
  const std::size_t herald = pattern.modes();
  if (herald == 0) return expansion;
  if (herald >= expansion.modes)
    throw ContractViolation("heralding " + std::to_string(herald) + " of " + std::to_string(expansion.modes) +
                            " modes leaves no output");
  if (pattern.total() > expansion.photons)
    throw ContractViolation("heralding pattern needs " + std::to_string(pattern.total()) + " photons, input has " +
                            std::to_string(expansion.photons));
  OutputExpansion out;
  out.space = expansion.space;
  out.modes = expansion.modes - herald;
  out.photons = expansion.photons - pattern.total();
  out.input_modes = expansion.input_modes;
  out.input_photons = expansion.input_photons;
  for (const auto& [occ, poly] : expansion.coefficients)
    if (occ.suffix_from(out.modes) == pattern) out.coefficients.emplace(occ.prefix(out.modes), poly);
  return out;
}

void append_target_equations(PolynomialSystem& out, const OutputExpansion& heralded, const PureState& target,
                             std::size_t pair_index) {
  if (target.modes() != heralded.modes || target.photons() != heralded.photons)
    throw ContractViolation("target has " + std::to_string(target.photons()) + " photons over " +
                            std::to_string(target.modes()) + " modes, heralded output has " +
                            std::to_string(heralded.photons) + " over " + std::to_string(heralded.modes));
  const auto& space = heralded.space;
  const auto gamma = MultiPoly::variable(space, space->gamma_index());
  for (const auto& occ : fock::fock_basis(heralded.photons, heralded.modes)) {
    ++out.emitted;
    MultiPoly g(space);
    if (auto it = heralded.coefficients.find(occ); it != heralded.coefficients.end()) g = it->second;
    GaussianRational q;
    if (auto it = target.terms().find(occ); it != target.terms().end()) q = PureState::exact_amplitude(it->second);
    MultiPoly f = poly_mul(gamma, g);
    f.add_term(algebra::ExponentTuple(space->size()), -q);
    if (f.is_zero()) {
      ++out.pruned;
      continue;
    }
    check_gamma_form(f, g, heralded.input_photons);
    out.equations.push_back({std::move(f), {EquationTag::Kind::target, pair_index, occ}});
  }
}

PolynomialSystem build_system(const OutputExpansion& heralded, const PureState& target) {
  PolynomialSystem out;
  out.space = heralded.space;
  out.photons = out.max_photons = heralded.input_photons;
  out.herald_photons = heralded.input_photons - heralded.photons;
  out.modes = heralded.input_modes;
  out.herald_modes = heralded.input_modes - heralded.modes;
  append_target_equations(out, heralded, target, 0);
  return out;
}

PolynomialSystem compile_task(const fock::ValidatedTask& task) {
  auto space = algebra::VariableSpace::matrix(task.active_rows, static_cast<unsigned>(task.spec.modes), true);
  auto expansion = expand_evolution(task.input, space);
  auto heralded = herald_project(expansion, task.spec.herald_pattern);
  return build_system(heralded, task.target);
}

PolynomialSystem build_multi_system(const fock::ValidatedMultiTask& task) {
  const auto& spec = task.spec;
  auto space = algebra::VariableSpace::matrix(task.active_rows, static_cast<unsigned>(spec.modes), true);
  PolynomialSystem out;
  out.space = space;
  out.photons = out.max_photons = task.photons;
  out.herald_photons = task.herald_photons;
  out.modes = spec.modes;
  out.herald_modes = spec.herald_modes;
  out.pairs = task.pairs.size();
  out.suppressions = spec.suppressions.size();
  for (std::size_t p = 0; p < task.pairs.size(); ++p) {
    auto heralded = herald_project(expand_evolution(task.pairs[p].input, space), spec.herald_pattern);
    append_target_equations(out, heralded, task.pairs[p].target, p);
  }
  for (std::size_t s = 0; s < spec.suppressions.size(); ++s) {
    const auto& input = spec.suppressions[s];
    out.max_photons = std::max(out.max_photons, input.photons());
    // Too few photons to ever fire the herald: nothing to suppress.
    if (input.photons() < spec.herald_pattern.total()) continue;
    auto heralded = herald_project(expand_evolution(input, space), spec.herald_pattern);
    for (const auto& occ : fock::fock_basis(heralded.photons, heralded.modes)) {
      ++out.emitted;
      auto it = heralded.coefficients.find(occ);
      if (it == heralded.coefficients.end()) {
        ++out.pruned;
        continue;
      }
      if (!it->second.is_homogeneous() || it->second.constant_term() != GaussianRational())
        throw InternalError("suppression equation is not homogeneous");
      out.equations.push_back({it->second, {EquationTag::Kind::suppression, s, occ}});
    }
  }
  return out;
}

std::string serialize_system(const PolynomialSystem& system) {
  std::ostringstream out;
  const auto& vs = *system.space;
  out << "nullcert-system 1\n";
  out << "variables " << vs.size() << "\n";
  for (std::size_t k = 0; k < vs.size(); ++k) out << k << ' ' << vs[k].name() << "\n";
  out << "photons " << system.photons << "\n";
  out << "max_photons " << system.max_photons << "\n";
  out << "herald_photons " << system.herald_photons << "\n";
  out << "modes " << system.modes << "\n";
  out << "herald_modes " << system.herald_modes << "\n";
  out << "emitted " << system.emitted << "\n";
  out << "pruned " << system.pruned << "\n";
  out << "equations " << system.size() << "\n";
  for (std::size_t k = 0; k < system.size(); ++k) {
    const auto& eq = system.equations[k];
    out << "eq " << k << ' ' << eq.tag.to_string() << " | " << eq.poly.to_string() << "\n";
  }
  return out.str();
}

GaussianRational ryser_permanent(const std::vector<std::vector<GaussianRational>>& matrix) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix)
    if (row.size() != n) throw ContractViolation("permanent needs a square matrix");
  if (n > 12) throw ContractViolation("permanent dimension " + std::to_string(n) + " exceeds the cap of 12");
  if (n == 0) return GaussianRational(1);

  // perm(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij, walking the
  // subsets in Gray-code order so each step toggles one column.
  std::vector<GaussianRational> row_sums(n);
  GaussianRational total;
  std::uint32_t gray = 0;
  for (std::uint32_t step = 1; step < (1u << n); ++step) {
    const std::uint32_t next = step ^ (step >> 1);
    const std::uint32_t flipped = next ^ gray;
    const std::size_t col = static_cast<std::size_t>(__builtin_ctz(flipped));
    const bool added = (next & flipped) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (added)
        row_sums[i] += matrix[i][col];
      else
        row_sums[i] -= matrix[i][col];
    }
    gray = next;
    GaussianRational prod = row_sums[0];
    for (std::size_t i = 1; i < n && !prod.is_zero(); ++i) prod *= row_sums[i];
    if ((__builtin_popcount(gray) & 1) == (n & 1))
      total += prod;
    else
      total -= prod;
  }
  return total;
}

}  // namespace nullcert::compiler
