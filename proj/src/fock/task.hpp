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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fock/state.hpp"

namespace nullcert::fock {

// A heralded state-generation task. Heralding modes are always the last
// `herald_modes` modes; `mode_order[p]` is the user's original index of
// mode p when the task file named its heralding modes explicitly.
//
// Input and target are optional so that a raw parse can be validated and
// every problem reported at once.
struct TaskSpec {
  std::size_t modes = 0;
  std::optional<PureState> input;
  std::size_t herald_modes = 0;
  OccupationVector herald_pattern;
  std::optional<PureState> target;
  Arithmetic arithmetic = Arithmetic::exact;
  std::vector<unsigned> mode_order;
};

struct ValidatedTask {
  TaskSpec spec;
  unsigned photons = 0;          // n
  unsigned herald_photons = 0;   // m
  std::size_t target_modes = 0;  // N_T as given, before vacuum padding
  PureState input;
  PureState target;  // padded with vacuum to modes - herald_modes
  std::vector<unsigned> active_rows;
};

// Throws ValidationError listing every violated invariant.
ValidatedTask validate_task(const TaskSpec& task);

// Single photons in the first n modes, one-photon heralds on the last m
// modes. Surplus modes when n > N_T + m are heralded on vacuum, placed before
// the one-photon heralds.
TaskSpec canonicalize(unsigned n, unsigned m, const PureState& target);

struct TaskPair {
  PureState input;
  PureState target;
};

// Several input/target pairs realized by one transfer matrix and one gamma,
// plus inputs whose heralding probability must vanish.
struct MultiTaskSpec {
  std::size_t modes = 0;
  std::size_t herald_modes = 0;
  OccupationVector herald_pattern;
  Arithmetic arithmetic = Arithmetic::exact;
  std::vector<TaskPair> pairs;
  std::vector<PureState> suppressions;
  std::vector<unsigned> mode_order;
};

struct ValidatedMultiTask {
  MultiTaskSpec spec;
  unsigned photons = 0;
  unsigned herald_photons = 0;
  std::vector<TaskPair> pairs;  // targets padded
  std::vector<unsigned> active_rows;
};

ValidatedMultiTask validate_multi_task(const MultiTaskSpec& task);

// Amplitudes are sampled as a Haar-random Fock vector, converted to
// creation-polynomial coefficients, and rounded to multiples of
// 1/denom_bound. Deterministic per seed.
PureState haar_random_target(unsigned photons, std::size_t modes, std::uint64_t seed,
                             std::uint64_t denom_bound = 1ull << 16);

// Task files: "key = value" lines, '#' comments, optional [pair] and
// [suppression] blocks for multi-pair tasks.
using AnyTask = std::variant<TaskSpec, MultiTaskSpec>;
AnyTask parse_task_file(std::string_view text);
std::string serialize_task(const TaskSpec& task);
std::string serialize_multi_task(const MultiTaskSpec& task);

}  // namespace nullcert::fock
