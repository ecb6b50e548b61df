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

// Named experiment suites with their published expectations.
//
//   default   noon3, noon4, table1:1, table1:2, table1:3
//   extended  default plus bell3, cnot1, noon5..noon7, table1:4, and
//             table1:2 searched to degree 9
//   single    bell3, cnot1, noon3..noon7, table1:1..table1:4, or "table1"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fock/task.hpp"
#include "nulla/nulla.hpp"

namespace nullcert::repro {

struct Experiment {
  enum class Expect { infeasible, undecided };
  std::string name;
  fock::AnyTask task;
  Expect expect = Expect::infeasible;
  unsigned ceiling = 0;     // degree the published result reaches
  unsigned max_degree = 0;  // search cap used here
  bool heavy = false;       // needs --extended
  std::string expectation;  // human-readable published claim
};

struct ReproduceConfig {
  std::string suite = "default";
  std::optional<unsigned> samples;     // per Haar-random group
  std::uint64_t seed = 2024;
  std::optional<unsigned> max_degree;  // overrides every experiment's cap
  bool extended = false;
  unsigned workers = 1;
  std::size_t memory_budget = nulla::kDefaultMemoryBudget;
  std::string out_dir;                 // certificates are written here when set
};

// Builders for the published tasks.
fock::TaskSpec noon_task(unsigned n);
fock::TaskSpec bell_task();
fock::MultiTaskSpec cnot_task();

std::vector<Experiment> suite_experiments(const ReproduceConfig& config);

// Runs the suite and returns the aggregate report. Wall-clock figures are
// confined to the top-level "timing" object.
nlohmann::ordered_json run_reproduce(const ReproduceConfig& config);

}  // namespace nullcert::repro
