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

// Closed-form sizes of the certificate search: number of equations, column
// and row bounds of the degree-d linear system, and a degree that suffices
// to decide feasibility. Everything is exact.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace nullcert::bounds {

struct Geometry {
  unsigned n = 0;  // input photons
  unsigned m = 0;  // heralded photons
  unsigned N = 0;  // modes
  unsigned M = 0;  // heralded modes
};

mpz_class binomial(unsigned long top, unsigned long bottom);

// min(N n, N^2)
mpz_class max_variables(const Geometry& g);
// C(n-m+N-M-1, n-m)
mpz_class equation_count(const Geometry& g);
// s * C(V_max + d, d)
mpz_class column_bound(const Geometry& g, unsigned d);
// C(V+d+n, V) when d >= n-1, else C(V+d+n, V) - C(V-1+n, V) + C(V+d, V).
mpz_class row_bound(const Geometry& g, unsigned d);

// n^min(V_max, s) - n for n >= 3. For n = 2 the value 2 * 2^min(V_max, s) - 2
// is used; that branch is fitted to the published two-photon entries rather
// than quoted from a closed form. Throws ContractViolation for n < 2.
mpz_class degree_upper_bound(const Geometry& g);
bool degree_bound_is_fitted(const Geometry& g);

struct ScalingProfile {
  Geometry geometry;
  unsigned target_modes = 0;
  mpz_class v_max;
  mpz_class s;
  std::vector<mpz_class> column_bounds;  // index = degree
  std::vector<mpz_class> row_bounds;
  bool has_degree_bound = false;
  mpz_class degree_bound;
  bool degree_bound_fitted = false;
};

ScalingProfile scaling_profile(const Geometry& g, unsigned max_degree);
// Aligned human-readable table.
std::string format_profile(const ScalingProfile& p);

}  // namespace nullcert::bounds
