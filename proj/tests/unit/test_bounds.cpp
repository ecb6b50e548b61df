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

#include <gtest/gtest.h>

#include <random>

#include "bounds/bounds.hpp"
#include "oracles.hpp"
#include "util/error.hpp"

namespace {

using namespace nullcert::bounds;

mpz_class pow_mpz(unsigned long base, unsigned long exp) {
  mpz_class out = 1;
  for (unsigned long k = 0; k < exp; ++k) out *= base;
  return out;
}

// Closed forms written out directly.
mpz_class v_max(const Geometry& g) { return std::min<unsigned long>(g.N * g.n, g.N * g.N); }
mpz_class s_count(const Geometry& g) { return oracle::choose(g.n - g.m + g.N - g.M - 1, g.n - g.m); }

TEST(Bounds, EquationCountExamples) {
  // Bell geometry: C(2 + 4 - 1, 2).
  EXPECT_EQ(equation_count({3, 1, 5, 1}), 10);
  EXPECT_EQ(equation_count({1, 0, 1, 0}), 1);
  EXPECT_EQ(equation_count({2, 0, 3, 0}), 6);
}

TEST(Bounds, EquationCountPreconditions) {
  EXPECT_THROW(equation_count({2, 2, 3, 0}), nullcert::ContractViolation);
  EXPECT_THROW(equation_count({2, 0, 3, 3}), nullcert::ContractViolation);
}

TEST(Bounds, ColumnBoundExamples) {
  const Geometry noon3{3, 0, 2, 0};
  EXPECT_EQ(column_bound(noon3, 3), 140);
  EXPECT_EQ(column_bound(noon3, 0), equation_count(noon3));
}

TEST(Bounds, RowBoundBranches) {
  const Geometry noon3{3, 0, 2, 0};
  EXPECT_EQ(row_bound(noon3, 3), 210);
  EXPECT_EQ(row_bound(noon3, 1), 60);
}

TEST(Bounds, TableOneDegreeBounds) {
  EXPECT_EQ(degree_upper_bound({2, 0, 3, 0}), 126);
  EXPECT_EQ(degree_upper_bound({3, 1, 4, 1}), 726);
  EXPECT_EQ(degree_upper_bound({2, 0, 4, 0}), 510);
  EXPECT_EQ(degree_upper_bound({3, 1, 5, 1}), 59046);
  EXPECT_TRUE(degree_bound_is_fitted({2, 0, 3, 0}));
  EXPECT_FALSE(degree_bound_is_fitted({3, 1, 5, 1}));
}

TEST(Bounds, FourPhotonFourModeBound) {
  // V_max = 16 and s = C(3 + 3 - 1, 3) = 10, so the formula gives 4^10 - 4,
  // far below the 10^17 quoted for this geometry.
  const Geometry g{4, 1, 4, 1};
  EXPECT_EQ(degree_upper_bound(g), pow_mpz(4, 10) - 4);
  EXPECT_EQ(degree_upper_bound(g), 1048572);
}

TEST(Bounds, SinglePhotonUnsupported) {
  EXPECT_THROW(degree_upper_bound({1, 0, 2, 0}), nullcert::ContractViolation);
}

TEST(Bounds, FormulasOnRandomGeometries) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<unsigned> nd(2, 6), Nd(2, 7), dd(0, 8);
    Geometry g;
    g.n = nd(rng);
    g.m = std::uniform_int_distribution<unsigned>(0, g.n - 1)(rng);
    g.N = Nd(rng);
    g.M = std::uniform_int_distribution<unsigned>(0, g.N - 1)(rng);
    const unsigned d = dd(rng);
    const mpz_class V = v_max(g), s = s_count(g);
    EXPECT_EQ(max_variables(g), V);
    EXPECT_EQ(equation_count(g), s);
    EXPECT_EQ(column_bound(g, d), s * oracle::choose(V.get_si() + d, d));
    const long Vl = V.get_si();
    const long n = g.n;
    const mpz_class rows = d + 1 >= g.n ? oracle::choose(Vl + d + n, Vl)
                                         : mpz_class(oracle::choose(Vl + d + n, Vl) - oracle::choose(Vl - 1 + n, Vl) +
                                                     oracle::choose(Vl + d, Vl));
    EXPECT_EQ(row_bound(g, d), rows);
    const unsigned long k = std::min(V, s).get_ui();
    const mpz_class K = g.n == 2 ? mpz_class(2 * pow_mpz(2, k) - 2) : mpz_class(pow_mpz(g.n, k) - g.n);
    EXPECT_EQ(degree_upper_bound(g), K);
  }
}

TEST(Bounds, ProfileFormatting) {
  const auto p = scaling_profile({2, 0, 3, 0}, 4);
  EXPECT_EQ(p.v_max, 6);
  EXPECT_EQ(p.s, 6);
  ASSERT_EQ(p.column_bounds.size(), 5u);
  EXPECT_TRUE(p.has_degree_bound);
  EXPECT_EQ(p.degree_bound, 126);
  const auto text = format_profile(p);
  EXPECT_NE(text.find("126"), std::string::npos);
  EXPECT_NE(text.find("reverse-engineered"), std::string::npos);
}

}  // namespace
