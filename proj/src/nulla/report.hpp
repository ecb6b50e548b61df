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

#include <json.hpp>

#include "nulla/nulla.hpp"

namespace nullcert::nulla {

// Wall-clock figures go under "timing" and nowhere else, so two runs of the
// same search differ only there.
nlohmann::ordered_json report_json(const NullaReport& report);
nlohmann::ordered_json options_json(const CertificateSearchOptions& opts);

}  // namespace nullcert::nulla
