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

#include "fock/task.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "util/error.hpp"

namespace nullcert::fock {

namespace {

std::vector<unsigned> active_rows_of(std::span<const PureState* const> inputs) {
  std::set<unsigned> rows;
  for (const PureState* s : inputs)
    for (const auto& [occ, amp] : s->terms())
      for (std::size_t k = 0; k < occ.modes(); ++k)
        if (occ[k] > 0) rows.insert(static_cast<unsigned>(k));
  return {rows.begin(), rows.end()};
}

std::string mode_word(std::size_t k) { return std::to_string(k) + (k == 1 ? " mode" : " modes"); }

}  // namespace

ValidatedTask validate_task(const TaskSpec& task) {
  std::vector<std::string> issues;
  const std::size_t n_modes = task.modes;
  if (n_modes == 0) issues.push_back("mode count must be at least 1");
  if (task.herald_modes >= std::max<std::size_t>(n_modes, 1))
    issues.push_back("heralding " + mode_word(task.herald_modes) + " leaves no output mode out of " +
                     mode_word(n_modes));
  if (task.herald_pattern.modes() != task.herald_modes)
    issues.push_back("heralding pattern has " + std::to_string(task.herald_pattern.modes()) +
                     " entries but " + mode_word(task.herald_modes) + " are heralded");
  if (!task.input) issues.push_back("missing input state");
  if (!task.target) issues.push_back("empty target");

  const unsigned m = task.herald_pattern.total();
  unsigned n = 0;
  if (task.input) {
    n = task.input->photons();
    if (task.input->modes() != n_modes)
      issues.push_back("input has " + mode_word(task.input->modes()) + ", task has " + mode_word(n_modes));
    if (n == 0) issues.push_back("input carries no photons");
    if (m > n)
      issues.push_back("heralding pattern needs " + std::to_string(m) + " photons but the input has " +
                       std::to_string(n));
  }
  if (task.target) {
    if (task.target->modes() + task.herald_modes > n_modes)
      issues.push_back("target mode count " + std::to_string(task.target->modes()) + " + heralded modes " +
                       std::to_string(task.herald_modes) + " exceeds " + mode_word(n_modes));
    if (task.input && n >= m && task.target->photons() != n - m)
      issues.push_back("photon bookkeeping: n - m = " + std::to_string(n - m) + " but the target carries " +
                       std::to_string(task.target->photons()) + " photons");
  }
  if (task.arithmetic == Arithmetic::exact) {
    if (task.input && !task.input->is_exact()) issues.push_back("float amplitudes in the input under exact arithmetic");
    if (task.target && !task.target->is_exact())
      issues.push_back("float amplitudes in the target under exact arithmetic");
  }
  if (!task.mode_order.empty()) {
    auto sorted = task.mode_order;
    std::sort(sorted.begin(), sorted.end());
    bool perm = sorted.size() == n_modes;
    for (std::size_t k = 0; perm && k < sorted.size(); ++k) perm = sorted[k] == k;
    if (!perm) issues.push_back("mode_order is not a permutation of the task's modes");
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  ValidatedTask v{task, n, m, task.target->modes(), *task.input, task.target->padded(n_modes - task.herald_modes), {}};
  const PureState* inputs[] = {&v.input};
  v.active_rows = active_rows_of(inputs);
  return v;
}

TaskSpec canonicalize(unsigned n, unsigned m, const PureState& target) {
  if (n == 0) throw ValidationError({"canonical tasks need at least one input photon"});
  if (n < m || target.photons() != n - m)
    throw ValidationError({"photon bookkeeping: n - m = " + std::to_string(static_cast<long>(n) - m) +
                           " but the target carries " + std::to_string(target.photons()) + " photons"});
  const std::size_t nt = target.modes();
  const std::size_t total = std::max<std::size_t>(n, nt + m);
  TaskSpec t;
  t.modes = total;
  std::vector<unsigned> input(total, 0);
  std::fill(input.begin(), input.begin() + n, 1u);
  t.input = PureState::basis(OccupationVector(std::move(input)));
  t.herald_modes = total - nt;
  std::vector<unsigned> pattern(t.herald_modes, 0);
  std::fill(pattern.end() - m, pattern.end(), 1u);
  t.herald_pattern = OccupationVector(std::move(pattern));
  t.target = target;
  t.arithmetic = target.is_exact() ? Arithmetic::exact : Arithmetic::floating;
  return t;
}

ValidatedMultiTask validate_multi_task(const MultiTaskSpec& task) {
  std::vector<std::string> issues;
  const std::size_t n_modes = task.modes;
  if (n_modes == 0) issues.push_back("mode count must be at least 1");
  if (task.herald_modes >= std::max<std::size_t>(n_modes, 1))
    issues.push_back("heralding " + mode_word(task.herald_modes) + " leaves no output mode");
  if (task.herald_pattern.modes() != task.herald_modes)
    issues.push_back("heralding pattern length does not match the heralded mode count");
  if (task.pairs.empty()) issues.push_back("multi-pair task without any pair");

  const unsigned m = task.herald_pattern.total();
  std::optional<unsigned> n;
  for (std::size_t p = 0; p < task.pairs.size(); ++p) {
    const auto& [in, tg] = task.pairs[p];
    const std::string tag = "pair " + std::to_string(p) + ": ";
    if (in.modes() != n_modes) issues.push_back(tag + "input has " + mode_word(in.modes()));
    if (tg.modes() + task.herald_modes > n_modes) issues.push_back(tag + "target does not fit the output modes");
    if (in.photons() < m || tg.photons() != in.photons() - m)
      issues.push_back(tag + "photon bookkeeping violated (input " + std::to_string(in.photons()) + ", herald " +
                       std::to_string(m) + ", target " + std::to_string(tg.photons()) + ")");
    if (n && *n != in.photons()) issues.push_back(tag + "all pairs must share one input photon number");
    if (!n) n = in.photons();
    if (task.arithmetic == Arithmetic::exact) {
      if (!in.is_exact() || !tg.is_exact()) issues.push_back(tag + "float amplitudes under exact arithmetic");
      for (const auto& [occ, amp] : in.terms())
        if (std::any_of(occ.counts().begin(), occ.counts().end(), [](unsigned c) { return c > 1; })) {
          issues.push_back(tag + "exact multi-pair inputs must have at most one photon per mode");
          break;
        }
    }
  }
  for (std::size_t s = 0; s < task.suppressions.size(); ++s) {
    const auto& in = task.suppressions[s];
    const std::string tag = "suppression " + std::to_string(s) + ": ";
    if (in.modes() != n_modes) issues.push_back(tag + "input has " + mode_word(in.modes()));
    if (n && in.photons() == *n) issues.push_back(tag + "photon number must differ from the pairs' n");
    if (task.arithmetic == Arithmetic::exact && !in.is_exact())
      issues.push_back(tag + "float amplitudes under exact arithmetic");
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));

  ValidatedMultiTask v;
  v.spec = task;
  v.photons = *n;
  v.herald_photons = m;
  std::vector<const PureState*> inputs;
  for (const auto& [in, tg] : task.pairs) {
    v.pairs.push_back({in, tg.padded(n_modes - task.herald_modes)});
    inputs.push_back(&in);
  }
  for (const auto& in : task.suppressions) inputs.push_back(&in);
  v.active_rows = active_rows_of(inputs);
  return v;
}

PureState haar_random_target(unsigned photons, std::size_t modes, std::uint64_t seed, std::uint64_t denom_bound) {
  if (photons < 1) throw ContractViolation("random targets need at least one photon");
  if (modes < 2) throw ContractViolation("random targets need at least two modes");
  if (denom_bound < (1ull << 16) || (denom_bound & (denom_bound - 1)) != 0)
    throw ContractViolation("denominator bound must be a power of two >= 2^16");

  const auto basis = fock_basis(photons, modes);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double scale = static_cast<double>(denom_bound);
  const mpz_class den(std::to_string(denom_bound));

  constexpr int kMaxAttempts = 16;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<std::complex<double>> amps;
    double norm2 = 0.0;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      double re = normal(rng);
      double im = normal(rng);
      amps.emplace_back(re, im);
      norm2 += re * re + im * im;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    std::vector<std::pair<OccupationVector, Amplitude>> terms;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      // Fock amplitude psi -> polynomial coefficient psi / sqrt(prod n!).
      const double f = inv / std::sqrt(static_cast<double>(basis[k].factorial_product()));
      auto round_part = [&](double x) {
        return BigRational(mpz_class(std::to_string(static_cast<long long>(std::llround(x * f * scale)))), den);
      };
      GaussianRational c(round_part(amps[k].real()), round_part(amps[k].imag()));
      if (!c.is_zero()) terms.emplace_back(basis[k], std::move(c));
    }
    if (!terms.empty()) return PureState::make(modes, std::move(terms));
  }
  throw ContractViolation("random target rationalized to zero after repeated sampling");
}

}  // namespace nullcert::fock
