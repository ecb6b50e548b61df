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

#include "bounds/bounds.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "util/error.hpp"

namespace nullcert::bounds {

namespace {

void check(const Geometry& g) {
  if (g.n <= g.m) throw ContractViolation("bookkeeping requires n > m");
  if (g.N <= g.M) throw ContractViolation("bookkeeping requires N > M");
}

unsigned long as_ulong(const mpz_class& v, const char* what) {
  if (!v.fits_ulong_p()) throw ContractViolation(std::string(what) + " is too large for an exponent");
  return v.get_ui();
}

}  // namespace

mpz_class binomial(unsigned long top, unsigned long bottom) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), top, bottom);
  return out;
}

mpz_class max_variables(const Geometry& g) {
  mpz_class N = g.N;
  return std::min<mpz_class>(N * g.n, N * N);
}

mpz_class equation_count(const Geometry& g) {
  check(g);
  return binomial(g.n - g.m + g.N - g.M - 1, g.n - g.m);
}

mpz_class column_bound(const Geometry& g, unsigned d) {
  const auto v = as_ulong(max_variables(g), "V_max");
  return equation_count(g) * binomial(v + d, d);
}

mpz_class row_bound(const Geometry& g, unsigned d) {
  check(g);
  const auto v = as_ulong(max_variables(g), "V_max");
  const unsigned long n = g.n;
  mpz_class full = binomial(v + d + n, v);
  if (d + 1 >= n) return full;
  return full - binomial(v - 1 + n, v) + binomial(v + d, v);
}

mpz_class degree_upper_bound(const Geometry& g) {
  check(g);
  if (g.n < 2) throw ContractViolation("degree upper bound needs at least two photons");
  const auto k = as_ulong(std::min(max_variables(g), equation_count(g)), "min(V_max, s)");
  mpz_class pow;
  mpz_ui_pow_ui(pow.get_mpz_t(), g.n, k);
  if (g.n == 2) return 2 * pow - 2;
  return pow - g.n;
}

bool degree_bound_is_fitted(const Geometry& g) { return g.n == 2; }

ScalingProfile scaling_profile(const Geometry& g, unsigned max_degree) {
  ScalingProfile p;
  p.geometry = g;
  p.target_modes = g.N - g.M;
  p.v_max = max_variables(g);
  p.s = equation_count(g);
  for (unsigned d = 0; d <= max_degree; ++d) {
    p.column_bounds.push_back(column_bound(g, d));
    p.row_bounds.push_back(row_bound(g, d));
  }
  if (g.n >= 2) {
    p.has_degree_bound = true;
    p.degree_bound = degree_upper_bound(g);
    p.degree_bound_fitted = degree_bound_is_fitted(g);
  }
  return p;
}

std::string format_profile(const ScalingProfile& p) {
  std::ostringstream out;
  const auto& g = p.geometry;
  out << "n = " << g.n << ", m = " << g.m << ", N = " << g.N << ", M = " << g.M << "\n";
  out << "V_max = " << p.v_max.get_str() << "\n";
  out << "equations s = " << p.s.get_str() << "\n";
  if (p.has_degree_bound) {
    out << "degree bound K = " << p.degree_bound.get_str();
    if (p.degree_bound_fitted) out << "  (two-photon branch reverse-engineered from published two-photon bounds)";
    out << "\n";
  } else {
    out << "degree bound K = unavailable for n < 2\n";
  }
  std::size_t cw = 7, rw = 4;
  for (std::size_t d = 0; d < p.column_bounds.size(); ++d) {
    cw = std::max(cw, p.column_bounds[d].get_str().size());
    rw = std::max(rw, p.row_bounds[d].get_str().size());
  }
  out << std::setw(6) << "degree" << "  " << std::setw(static_cast<int>(cw)) << "columns" << "  "
      << std::setw(static_cast<int>(rw)) << "rows" << "\n";
  for (std::size_t d = 0; d < p.column_bounds.size(); ++d)
    out << std::setw(6) << d << "  " << std::setw(static_cast<int>(cw)) << p.column_bounds[d].get_str() << "  "
        << std::setw(static_cast<int>(rw)) << p.row_bounds[d].get_str() << "\n";
  return out.str();
}

}  // namespace nullcert::bounds
