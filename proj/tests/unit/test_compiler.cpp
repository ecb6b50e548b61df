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
#include "compiler/compiler.hpp"
#include "oracles.hpp"
#include "repro/reproduce.hpp"
#include "util/error.hpp"

namespace {

using namespace nullcert;
using namespace nullcert::compiler;
using algebra::BigRational;
using algebra::ExponentTuple;
using algebra::VariableSpace;
using fock::parse_state;

OccupationVector occ(std::vector<unsigned> v) { return OccupationVector(std::move(v)); }

VariableSpacePtr full_space(unsigned n_modes, bool gamma = false) {
  std::vector<unsigned> rows;
  for (unsigned r = 0; r < n_modes; ++r) rows.push_back(r);
  return VariableSpace::matrix(rows, n_modes, gamma);
}

// Monomial in the 2x2 space A11 A12 A21 A22 (+ gamma).
ExponentTuple mono(std::vector<ExponentTuple::Exponent> e) { return ExponentTuple(std::move(e)); }

fock::ValidatedTask task_from(std::size_t modes, std::vector<unsigned> input, std::vector<unsigned> pattern,
                              const std::string& target) {
  fock::TaskSpec t;
  t.modes = modes;
  t.input = PureState::basis(occ(std::move(input)));
  t.herald_modes = pattern.size();
  t.herald_pattern = occ(std::move(pattern));
  t.target = parse_state(target);
  return fock::validate_task(t);
}

std::vector<GaussianRational> point_of(const PolynomialSystem& ps, const std::vector<long>& a, long gamma) {
  std::vector<GaussianRational> x;
  for (long v : a) x.emplace_back(v);
  if (ps.space->has_gamma()) x.emplace_back(gamma);
  EXPECT_EQ(x.size(), ps.space->size());
  return x;
}

TEST(Expansion, TwoSinglePhotons) {
  auto vs = full_space(2);
  const auto ex = expand_evolution(PureState::basis(occ({1, 1})), vs);
  ASSERT_EQ(ex.coefficients.size(), 3u);
  const auto& mixed = ex.coefficients.at(occ({1, 1}));
  EXPECT_EQ(mixed.term_count(), 2u);
  EXPECT_EQ(mixed.coefficient(mono({1, 0, 0, 1})), GaussianRational(1));
  EXPECT_EQ(mixed.coefficient(mono({0, 1, 1, 0})), GaussianRational(1));
  EXPECT_EQ(ex.coefficients.at(occ({2, 0})).coefficient(mono({1, 0, 1, 0})), GaussianRational(1));
  EXPECT_EQ(ex.coefficients.at(occ({0, 2})).coefficient(mono({0, 1, 0, 1})), GaussianRational(1));
}

TEST(Expansion, SinglePhoton) {
  auto vs = VariableSpace::matrix(std::vector<unsigned>{0}, 2, false);
  const auto ex = expand_evolution(PureState::basis(occ({1, 0})), vs);
  ASSERT_EQ(ex.coefficients.size(), 2u);
  EXPECT_EQ(ex.coefficients.at(occ({1, 0})).coefficient(mono({1, 0})), GaussianRational(1));
  EXPECT_EQ(ex.coefficients.at(occ({0, 1})).coefficient(mono({0, 1})), GaussianRational(1));
}

TEST(Expansion, NoonThreeInput) {
  auto vs = full_space(2);
  const auto ex = expand_evolution(PureState::basis(occ({2, 1})), vs);
  const auto& p = ex.coefficients.at(occ({3, 0}));
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_EQ(p.coefficient(mono({2, 0, 1, 0})), GaussianRational(1));
  for (const auto& [o, poly] : ex.coefficients) {
    EXPECT_TRUE(poly.is_homogeneous());
    EXPECT_EQ(*poly.degree(), 3u);
  }
}

TEST(Expansion, KeyCountBound) {
  auto vs = full_space(3);
  const auto ex = expand_evolution(PureState::basis(occ({1, 1, 1})), vs);
  EXPECT_EQ(mpz_class(static_cast<unsigned long>(ex.coefficients.size())), oracle::choose(3 + 3 - 1, 3));
}

TEST(Expansion, MissingRowRejected) {
  auto vs = VariableSpace::matrix(std::vector<unsigned>{0}, 2, false);
  EXPECT_THROW(expand_evolution(PureState::basis(occ({1, 1})), vs), ContractViolation);
}

TEST(Herald, SelectsMatchingKeys) {
  auto vs = full_space(2);
  const auto h = herald_project(expand_evolution(PureState::basis(occ({1, 1})), vs), occ({1}));
  ASSERT_EQ(h.coefficients.size(), 1u);
  const auto& g = h.coefficients.at(occ({1}));
  EXPECT_EQ(g.coefficient(mono({1, 0, 0, 1})), GaussianRational(1));
  EXPECT_EQ(g.coefficient(mono({0, 1, 1, 0})), GaussianRational(1));
}

TEST(Herald, EmptyPatternIsIdentity) {
  auto vs = full_space(2);
  const auto ex = expand_evolution(PureState::basis(occ({2, 1})), vs);
  const auto h = herald_project(ex, OccupationVector(std::vector<unsigned>{}));
  EXPECT_EQ(h.coefficients.size(), ex.coefficients.size());
  for (const auto& [o, p] : ex.coefficients) EXPECT_EQ(h.coefficients.at(o), p);
}

TEST(Herald, BellGeometryKeyCount) {
  auto vs = VariableSpace::matrix(std::vector<unsigned>{0, 1, 2}, 5, false);
  const auto h = herald_project(expand_evolution(PureState::basis(occ({1, 1, 1, 0, 0})), vs), occ({1}));
  EXPECT_LE(mpz_class(static_cast<unsigned long>(h.coefficients.size())), oracle::choose(2 + 3, 2));
}

TEST(Herald, PatternTooHeavy) {
  auto vs = VariableSpace::matrix(std::vector<unsigned>{0}, 2, false);
  EXPECT_THROW(herald_project(expand_evolution(PureState::basis(occ({1, 0})), vs), occ({2})), ContractViolation);
}

TEST(Herald, AgreesWithDifferentiation) {
  // Every single-term input with n <= 3 over up to 4 modes, every heralding
  // pattern on the last one or two modes.
  for (std::size_t modes = 2; modes <= 4; ++modes)
    for (unsigned n = 1; n <= 3; ++n)
      for (const auto& in : fock::fock_basis(n, modes))
        for (std::size_t M = 1; M <= std::min<std::size_t>(2, modes - 1); ++M)
          for (unsigned m = 0; m <= n; ++m)
            for (const auto& pat : fock::fock_basis(m, M)) {
              std::vector<unsigned> rows;
              for (std::size_t i = 0; i < modes; ++i)
                if (in[i] > 0) rows.push_back(static_cast<unsigned>(i));
              auto vs = VariableSpace::matrix(rows, static_cast<unsigned>(modes), false);
              const auto fast = herald_project(expand_evolution(PureState::basis(in), vs), pat);
              std::vector<unsigned> in_v(in.counts().begin(), in.counts().end());
              std::vector<unsigned> pat_v(pat.counts().begin(), pat.counts().end());
              const auto slow = oracle::differentiated_herald(in_v, pat_v, vs);
              const GaussianRational dropped(static_cast<long>(pat.factorial_product()));
              ASSERT_EQ(fast.coefficients.size(), slow.size()) << in.to_string() << " | " << pat.to_string();
              for (const auto& [o, p] : fast.coefficients) {
                std::vector<unsigned> key(o.counts().begin(), o.counts().end());
                ASSERT_TRUE(slow.count(key));
                EXPECT_EQ(p * dropped, slow.at(key)) << in.to_string() << " | " << pat.to_string();
              }
            }
}

TEST(BuildSystem, SingleTargetMonomial) {
  const auto ps = compile_task(task_from(2, {1, 1}, {}, "1 : 2 0"));
  ASSERT_EQ(ps.size(), 3u);
  EXPECT_EQ(ps.emitted, 3u);
  EXPECT_EQ(ps.space->size(), 5u);
  // Find gamma*A11*A21 - 1.
  bool found = false;
  for (const auto& eq : ps.equations)
    if (eq.tag.monomial == occ({2, 0})) {
      found = true;
      EXPECT_EQ(eq.poly.coefficient(mono({1, 0, 1, 0, 1})), GaussianRational(1));
      EXPECT_EQ(eq.poly.constant_term(), GaussianRational(-1));
      EXPECT_EQ(eq.poly.term_count(), 2u);
    }
  EXPECT_TRUE(found);
}

TEST(BuildSystem, HomVanishesAtBeamSplitter) {
  const auto ps = compile_task(task_from(2, {1, 1}, {}, "1 : 2 0 ; -1 : 0 2"));
  ASSERT_EQ(ps.size(), 3u);
  const auto x = point_of(ps, {1, 1, 1, -1}, 1);
  for (const auto& eq : ps.equations) EXPECT_TRUE(oracle::evaluate(eq.poly, x).is_zero()) << eq.tag.to_string();
}

TEST(BuildSystem, GammaFormShape) {
  const auto ps = compile_task(task_from(5, {1, 1, 1, 0, 0}, {1}, "1 : 1 0 1 0 ; 1 : 0 1 0 1"));
  EXPECT_EQ(ps.emitted, 10u);
  EXPECT_EQ(ps.space->size(), 16u);
  EXPECT_EQ(mpz_class(static_cast<unsigned long>(ps.emitted)), bounds::equation_count({3, 1, 5, 1}));
  for (const auto& eq : ps.equations) {
    EXPECT_EQ(eq.poly.weight(ps.photons), 0);
    for (const auto& [e, c] : eq.poly.terms()) {
      const auto t = algebra::gamma_degree(*ps.space, e);
      EXPECT_TRUE((t == 1 && algebra::matrix_degree(*ps.space, e) == 3) || e.degree() == 0);
    }
  }
}

TEST(BuildSystem, TrivialEquationsPruned) {
  // Vacuum-heralded mode 3 never receives amplitude from the outputs we keep,
  // but every output monomial over modes 1..2 is reachable; nothing pruned.
  const auto ps = compile_task(task_from(3, {2, 1, 0}, {0}, "1 : 3 0 ; 1 : 0 3"));
  EXPECT_EQ(ps.emitted, 4u);
  EXPECT_EQ(ps.pruned + ps.size(), ps.emitted);
}

TEST(BuildSystem, EquationCountIdentityOnRandomTasks) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<unsigned> nd(1, 3), md(0, 1), ntd(1, 3);
    const unsigned n = nd(rng);
    const unsigned m = std::min(md(rng), n - 1);
    const std::size_t nt = ntd(rng);
    const auto target = fock::PureState::basis(fock::fock_basis(n - m, nt).back());
    const auto spec = fock::canonicalize(n, m, target);
    const auto ps = compile_task(fock::validate_task(spec));
    const bounds::Geometry g{n, m, static_cast<unsigned>(spec.modes), static_cast<unsigned>(spec.herald_modes)};
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(ps.emitted)), bounds::equation_count(g));
  }
}

TEST(BuildSystem, InputScalingScalesG) {
  auto v1 = task_from(2, {2, 1}, {}, "1 : 3 0 ; 1 : 0 3");
  auto spec = v1.spec;
  const GaussianRational c(BigRational(2), BigRational(-1, 3));
  spec.input = spec.input->scaled(c);
  const auto ps1 = compile_task(v1);
  const auto ps2 = compile_task(fock::validate_task(spec));
  ASSERT_EQ(ps1.size(), ps2.size());
  for (std::size_t k = 0; k < ps1.size(); ++k)
    for (const auto& [e, coeff] : ps1.equations[k].poly.terms()) {
      if (e.degree() == 0)
        EXPECT_EQ(ps2.equations[k].poly.coefficient(e), coeff);
      else
        EXPECT_EQ(ps2.equations[k].poly.coefficient(e), coeff * c);
    }
}

TEST(BuildSystem, OnlyActiveRowsAndNothingPinned) {
  const auto ps = compile_task(task_from(3, {2, 1, 0}, {0}, "1 : 3 0 ; 1 : 0 3"));
  // Two active rows times three columns plus gamma.
  EXPECT_EQ(ps.space->size(), 7u);
  for (const auto& eq : ps.equations)
    for (const auto& [e, c] : eq.poly.terms())
      if (e.degree() > 0) EXPECT_EQ(algebra::gamma_degree(*ps.space, e), 1u);
}

TEST(MultiSystem, SinglePairMatchesBuildSystem) {
  const auto single = task_from(2, {1, 1}, {}, "1 : 2 0 ; -1 : 0 2");
  fock::MultiTaskSpec mt;
  mt.modes = 2;
  mt.pairs.push_back({*single.spec.input, *single.spec.target});
  const auto a = compile_task(single);
  const auto b = build_multi_system(fock::validate_multi_task(mt));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a.equations[k].poly.to_string(), b.equations[k].poly.to_string());
}

TEST(MultiSystem, SuppressionEquation) {
  fock::MultiTaskSpec mt;
  mt.modes = 2;
  mt.herald_modes = 1;
  mt.herald_pattern = occ({1});
  mt.pairs.push_back({PureState::basis(occ({1, 1})), parse_state("1 : 1")});
  mt.suppressions.push_back(PureState::basis(occ({1, 0})));
  const auto ps = build_multi_system(fock::validate_multi_task(mt));
  std::size_t suppressions = 0;
  for (const auto& eq : ps.equations) {
    if (eq.tag.kind != EquationTag::Kind::suppression) continue;
    ++suppressions;
    EXPECT_TRUE(eq.poly.constant_term().is_zero());
    EXPECT_TRUE(eq.poly.is_homogeneous());
    ASSERT_EQ(eq.poly.term_count(), 1u);
    const auto& e = eq.poly.terms().begin()->first;
    EXPECT_EQ(algebra::gamma_degree(*ps.space, e), 0u);
    EXPECT_EQ(*ps.space->index_of(0, 1), [&] {
      for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v]) return v;
      return e.size();
    }());
  }
  EXPECT_EQ(suppressions, 1u);
}

TEST(MultiSystem, CnotEquationCount) {
  const auto mt = repro::cnot_task();
  const auto ps = build_multi_system(fock::validate_multi_task(mt));
  EXPECT_EQ(ps.emitted, 40u);
  EXPECT_EQ(ps.pairs, 4u);
  // Rows 1..4 carry the logical photons, row 5 the ancilla.
  EXPECT_EQ(ps.space->matrix_entry_count(), 25u);
  EXPECT_TRUE(ps.space->has_gamma());
}

TEST(Permanent, SmallCases) {
  using M = std::vector<std::vector<GaussianRational>>;
  EXPECT_EQ(ryser_permanent(M{{1, 1}, {1, -1}}), GaussianRational(0));
  for (int n = 1; n <= 6; ++n) {
    M id(n, std::vector<GaussianRational>(n));
    for (int k = 0; k < n; ++k) id[k][k] = GaussianRational(1);
    EXPECT_EQ(ryser_permanent(id), GaussianRational(1));
  }
  EXPECT_EQ(ryser_permanent(M{{2, 3}, {5, 7}}), GaussianRational(2 * 7 + 3 * 5));
  EXPECT_THROW(ryser_permanent(M(13, std::vector<GaussianRational>(13))), ContractViolation);
}

TEST(Permanent, RyserMatchesPermutationSum) {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::vector<GaussianRational>> m(n, std::vector<GaussianRational>(n));
    for (auto& row : m)
      for (auto& x : row) x = oracle::random_gaussian(rng);
    EXPECT_EQ(ryser_permanent(m), oracle::permanent_by_permutations(m));
  }
}

TEST(Permanent, ExpansionMatchesPermanentOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<unsigned> nd(1, 4), Nd(1, 5);
    const unsigned N = std::max(Nd(rng), 1u);
    const unsigned n = std::min(nd(rng), N);
    // n single photons in a random subset of the modes.
    std::vector<unsigned> in(N, 0);
    std::vector<unsigned> modes(N);
    for (unsigned k = 0; k < N; ++k) modes[k] = k;
    std::shuffle(modes.begin(), modes.end(), rng);
    std::vector<unsigned> rows(modes.begin(), modes.begin() + n);
    std::sort(rows.begin(), rows.end());
    for (unsigned r : rows) in[r] = 1;
    auto vs = VariableSpace::matrix(rows, N, false);
    const auto ex = expand_evolution(PureState::basis(OccupationVector(in)), vs);

    std::vector<std::vector<GaussianRational>> A(N, std::vector<GaussianRational>(N));
    std::vector<GaussianRational> point(vs->size());
    for (unsigned r : rows)
      for (unsigned c = 0; c < N; ++c) {
        A[r][c] = oracle::random_gaussian(rng);
        point[*vs->index_of(r, c)] = A[r][c];
      }
    for (const auto& s : fock::fock_basis(n, N)) {
      std::vector<unsigned> cols;
      for (unsigned c = 0; c < N; ++c)
        for (unsigned k = 0; k < s[c]; ++k) cols.push_back(c);
      std::vector<std::vector<GaussianRational>> sub(n, std::vector<GaussianRational>(n));
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) sub[i][j] = A[rows[i]][cols[j]];
      const GaussianRational expected =
          ryser_permanent(sub) / GaussianRational(static_cast<long>(s.factorial_product()));
      auto it = ex.coefficients.find(s);
      const GaussianRational got = it == ex.coefficients.end() ? GaussianRational() : oracle::evaluate(it->second, point);
      ASSERT_EQ(got, expected) << "trial " << trial << " s=" << s.to_string();
    }
  }
}

TEST(Serialize, SystemText) {
  const auto ps = compile_task(task_from(2, {1, 1}, {}, "1 : 2 0 ; -1 : 0 2"));
  const auto text = serialize_system(ps);
  EXPECT_EQ(text.rfind("nullcert-system 1", 0), 0u);
  EXPECT_NE(text.find("A_1_1"), std::string::npos);
  EXPECT_NE(text.find("gamma"), std::string::npos);
  EXPECT_EQ(serialize_system(ps), text);
}

}  // namespace
