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

#include "nulla/nulla.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <unordered_map>

#include "bounds/bounds.hpp"
#include "util/error.hpp"

namespace nullcert::nulla {

namespace {

using algebra::BigRational;

std::optional<long> equation_weight(const PolynomialSystem& ps, std::size_t k) {
  return ps.equations.at(k).poly.weight(ps.photons);
}

long require_weight(const PolynomialSystem& ps, std::size_t k) {
  auto w = equation_weight(ps, k);
  if (!w)
    throw ContractViolation("equation " + std::to_string(k) +
                            " is not weight-homogeneous; grading and the matrix degree measure need the gamma form");
  return *w;
}

// Visits every (matrix degree a, gamma degree t) block of the multiplier
// basis of equation k at degree d.
void for_each_block(const PolynomialSystem& ps, std::size_t k, unsigned d, const CertificateSearchOptions& opts,
                    const std::function<void(unsigned, unsigned)>& visit) {
  const bool gamma = ps.space->has_gamma() && opts.gamma_in_beta;
  const long n = ps.photons;
  const bool need_weight = opts.w_grading || opts.measure == DegreeMeasure::matrix;
  const long w = need_weight ? require_weight(ps, k) : 0;
  const long dd = d;
  for (long t = 0; t <= (gamma ? dd + std::max(w, 0L) : 0); ++t) {
    for (long a = 0; a <= dd; ++a) {
      if (opts.measure == DegreeMeasure::matrix) {
        if (n * t - w > dd) continue;
      } else if (a + t > dd) {
        continue;
      }
      if (opts.w_grading && a - n * t != -w) continue;
      visit(static_cast<unsigned>(a), static_cast<unsigned>(t));
    }
  }
}

// Matrix entries that occur in some equation. Multipliers never need the
// others: zeroing them in any certificate leaves a certificate of no higher
// degree.
std::vector<std::size_t> used_matrix_variables(const PolynomialSystem& ps) {
  const std::size_t vars = ps.space->matrix_entry_count();
  std::vector<bool> used(vars, false);
  for (const auto& eq : ps.equations)
    for (const auto& [e, c] : eq.poly.terms())
      for (std::size_t v = 0; v < vars; ++v)
        if (e[v] != 0) used[v] = true;
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < vars; ++v)
    if (used[v]) out.push_back(v);
  return out;
}

mpz_class basis_count(const PolynomialSystem& ps, std::size_t k, unsigned d, const CertificateSearchOptions& opts) {
  const std::size_t vars = used_matrix_variables(ps).size();
  mpz_class total = 0;
  for_each_block(ps, k, d, opts, [&](unsigned a, unsigned) {
    if (vars == 0) {
      if (a == 0) total += 1;
      return;
    }
    total += bounds::binomial(vars + a - 1, a);
  });
  return total;
}

mpz_class total_basis_count(const PolynomialSystem& ps, unsigned d, const CertificateSearchOptions& opts) {
  mpz_class total = 0;
  for (std::size_t k = 0; k < ps.size(); ++k) total += basis_count(ps, k, d, opts);
  return total;
}

std::string format_monomial(const algebra::VariableSpace& vs, const ExponentTuple& e) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += vs[k].name();
    if (e[k] > 1) out += "^" + std::to_string(e[k]);
  }
  return out.empty() ? "1" : out;
}

// Best rational approximation with a bounded denominator.
BigRational rationalize(double x, long max_den) {
  if (!std::isfinite(x)) return BigRational(0);
  long double v = x;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    const long double a = std::floor(frac);
    if (std::fabs(a) > 1e15L) break;
    const auto ai = static_cast<long long>(a);
    const long long p2 = ai * p1 + p0;
    const long long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const long double rem = frac - a;
    if (rem < 1e-18L) break;
    frac = 1.0L / rem;
  }
  if (q1 == 0) return BigRational(0);
  return BigRational(mpz_class(std::to_string(p1)), mpz_class(std::to_string(q1)));
}

std::vector<MultiPoly> build_betas(const PolynomialSystem& ps, const SparseLinearSystem& sys,
                                   const std::vector<GaussianRational>& x) {
  std::vector<MultiPoly> betas(ps.size(), MultiPoly(ps.space));
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!x[j].is_zero()) betas[sys.columns[j].equation].add_term(sys.columns[j].monomial, x[j]);
  return betas;
}

Certificate make_certificate(const PolynomialSystem& ps, std::vector<MultiPoly> betas,
                             const CertificateSearchOptions& opts) {
  Certificate cert;
  cert.space = ps.space;
  cert.measure = opts.measure;
  cert.options = opts.summary();
  for (std::size_t k = 0; k < betas.size(); ++k)
    for (const auto& [e, c] : betas[k].terms()) {
      cert.degree = std::max(cert.degree, monomial_degree(ps, k, e, opts.measure));
      cert.total_degree = std::max(cert.total_degree, e.degree());
    }
  cert.betas = std::move(betas);
  return cert;
}

}  // namespace

std::string to_string(DegreeMeasure m) { return m == DegreeMeasure::matrix ? "matrix" : "total"; }

DegreeMeasure parse_degree_measure(std::string_view text) {
  if (text == "matrix") return DegreeMeasure::matrix;
  if (text == "total") return DegreeMeasure::total;
  throw ContractViolation("degree measure must be 'matrix' or 'total', got '" + std::string(text) + "'");
}

void CertificateSearchOptions::validate() const {
  if (!(float_tol >= 0.0)) throw ContractViolation("float tolerance must be nonnegative");
  if (arithmetic == fock::Arithmetic::floating && float_tol == 0.0)
    throw ContractViolation("float search needs a positive tolerance");
}

std::string CertificateSearchOptions::summary() const {
  return std::string("measure=") + to_string(measure) + " gamma_in_beta=" + (gamma_in_beta ? "on" : "off") +
         " grading=" + (w_grading ? "on" : "off") + " arithmetic=" + fock::to_string(arithmetic);
}

std::string to_string(DegreeOutcome::Kind k) {
  switch (k) {
    case DegreeOutcome::Kind::certificate: return "certificate";
    case DegreeOutcome::Kind::none: return "none";
    case DegreeOutcome::Kind::unchanged: return "unchanged";
    case DegreeOutcome::Kind::numeric_candidate: return "numeric-candidate";
  }
  return "none";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::infeasible_proven: return "INFEASIBLE_PROVEN";
    case Verdict::undecided: return "UNDECIDED";
    case Verdict::feasible_proven: return "FEASIBLE_PROVEN";
  }
  return "UNDECIDED";
}

unsigned monomial_degree(const PolynomialSystem& ps, std::size_t k, const ExponentTuple& e, DegreeMeasure measure) {
  const auto a = static_cast<long>(algebra::matrix_degree(*ps.space, e));
  const auto t = static_cast<long>(algebra::gamma_degree(*ps.space, e));
  if (measure == DegreeMeasure::total) return static_cast<unsigned>(a + t);
  const long w = equation_weight(ps, k).value_or(0);
  return static_cast<unsigned>(std::max({a, static_cast<long>(ps.photons) * t - w, 0L}));
}

std::vector<ExponentTuple> multiplier_basis(const PolynomialSystem& ps, std::size_t k, unsigned d,
                                            const CertificateSearchOptions& opts) {
  const auto& vs = *ps.space;
  const auto used = used_matrix_variables(ps);
  std::vector<ExponentTuple> out;
  for_each_block(ps, k, d, opts, [&](unsigned a, unsigned t) {
    algebra::for_each_composition(used.size(), a, [&](const std::vector<ExponentTuple::Exponent>& c) {
      std::vector<ExponentTuple::Exponent> full(vs.size(), 0);
      for (std::size_t j = 0; j < used.size(); ++j) full[used[j]] = c[j];
      if (vs.has_gamma()) full[vs.gamma_index()] = static_cast<ExponentTuple::Exponent>(t);
      out.emplace_back(std::move(full));
    });
  });
  std::sort(out.begin(), out.end(), algebra::GradedLess{});
  return out;
}

SparseLinearSystem assemble(const PolynomialSystem& ps, unsigned d, const CertificateSearchOptions& opts) {
  opts.validate();
  if (d > opts.max_degree)
    throw ContractViolation("degree " + std::to_string(d) + " exceeds the cap " + std::to_string(opts.max_degree));
  if (opts.w_grading && !ps.space->has_gamma()) throw ContractViolation("grading needs gamma in the variable space");

  // Triplets, the matrix and the row index each hold about one copy.
  mpz_class projected = 0;
  for (std::size_t k = 0; k < ps.size(); ++k)
    projected += basis_count(ps, k, d, opts) * static_cast<unsigned long>(ps.equations[k].poly.term_count());
  if (opts.memory_budget != 0) {
    const mpz_class bytes = projected * static_cast<unsigned long>(3 * linsolve::kBytesPerEntry);
    if (bytes > mpz_class(std::to_string(opts.memory_budget)))
      throw ResourceError("degree " + std::to_string(d) + " system projects " + projected.get_str() +
                              " nonzeros, over the " + std::to_string(opts.memory_budget) + "-byte budget",
                          "degree=" + std::to_string(d) + " projected_nnz=" + projected.get_str());
  }

  SparseLinearSystem sys;
  sys.degree = d;
  std::unordered_map<ExponentTuple, std::uint32_t, algebra::ExponentHash> row_of;
  std::vector<ExponentTuple> row_keys;
  auto row_index = [&](const ExponentTuple& mu) {
    auto [it, inserted] = row_of.try_emplace(mu, static_cast<std::uint32_t>(row_keys.size()));
    if (inserted) row_keys.push_back(mu);
    return it->second;
  };
  row_index(ExponentTuple(ps.space->size()));

  std::vector<linsolve::Triplet> triplets;
  for (std::size_t k = 0; k < ps.size(); ++k) {
    const auto& f = ps.equations[k].poly;
    for (auto& nu : multiplier_basis(ps, k, d, opts)) {
      const auto col = static_cast<std::uint32_t>(sys.columns.size());
      for (const auto& [e, c] : f.terms()) triplets.push_back({row_index(nu + e), col, c});
      sys.columns.push_back({k, std::move(nu)});
    }
  }

  // Renumber rows in graded order so indexing is independent of insertion.
  std::vector<std::uint32_t> order(row_keys.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) order[r] = r;
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return algebra::GradedLess{}(row_keys[a], row_keys[b]); });
  std::vector<std::uint32_t> rank(order.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  for (auto& t : triplets) t.row = rank[t.row];
  sys.row_monomials.reserve(order.size());
  for (std::uint32_t r : order) sys.row_monomials.push_back(std::move(row_keys[r]));

  sys.rhs.assign(sys.row_monomials.size(), GaussianRational());
  sys.rhs[0] = GaussianRational(1);
  sys.matrix = linsolve::SparseMatrix(sys.row_monomials.size(), sys.columns.size(), std::move(triplets));
  return sys;
}

std::optional<Certificate> find_certificate(const PolynomialSystem& ps, unsigned d,
                                            const CertificateSearchOptions& opts, DegreeOutcome* stats) {
  const auto start = std::chrono::steady_clock::now();
  DegreeOutcome local;
  DegreeOutcome& st = stats ? *stats : local;
  st = DegreeOutcome{};
  st.degree = d;
  auto finish = [&](DegreeOutcome::Kind kind) {
    st.outcome = kind;
    st.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  const auto sys = assemble(ps, d, opts);
  st.columns = sys.matrix.cols();
  st.rows = sys.matrix.rows();
  st.nonzeros = sys.matrix.nnz();

  if (opts.arithmetic == fock::Arithmetic::exact) {
    linsolve::SolveOptions so;
    so.memory_budget = opts.memory_budget;
    so.record_witness = false;
    const auto outcome = linsolve::solve_exact(sys.matrix, sys.rhs, so);
    st.pivots = outcome.stats.pivots;
    st.fill_in = outcome.stats.fill_in;
    if (!outcome.consistent()) {
      finish(DegreeOutcome::Kind::none);
      return std::nullopt;
    }
    auto cert = make_certificate(ps, build_betas(ps, sys, outcome.solution), opts);
    const auto check = verify_certificate(ps, cert);
    if (!check.ok)
      throw InternalError("solver returned a solution at degree " + std::to_string(d) +
                          " that fails symbolic verification: " + check.diagnostic);
    finish(DegreeOutcome::Kind::certificate);
    return cert;
  }

  // Float screening: only an exactly verified rationalization counts.
  const auto fo = linsolve::solve_float(sys.matrix, sys.rhs, opts.float_tol);
  st.residual = fo.residual;
  if (!fo.consistent_at_tol) {
    finish(DegreeOutcome::Kind::none);
    return std::nullopt;
  }
  constexpr long kMaxDenominator = 1L << 20;
  std::vector<GaussianRational> x;
  x.reserve(fo.solution.size());
  for (const auto& z : fo.solution)
    x.emplace_back(rationalize(z.real(), kMaxDenominator), rationalize(z.imag(), kMaxDenominator));
  auto cert = make_certificate(ps, build_betas(ps, sys, x), opts);
  if (verify_certificate(ps, cert).ok) {
    finish(DegreeOutcome::Kind::certificate);
    return cert;
  }
  finish(DegreeOutcome::Kind::numeric_candidate);
  return std::nullopt;
}

NullaReport certify(const PolynomialSystem& ps, const CertificateSearchOptions& opts) {
  opts.validate();
  NullaReport report;
  report.options = opts;

  const bool single = ps.pairs == 1 && ps.suppressions == 0;
  std::optional<mpz_class> bound;
  if (single && ps.photons >= 2 && ps.photons > ps.herald_photons && ps.modes > ps.herald_modes) {
    bounds::Geometry g{ps.photons, ps.herald_photons, static_cast<unsigned>(ps.modes),
                       static_cast<unsigned>(ps.herald_modes)};
    bound = bounds::degree_upper_bound(g);
    report.degree_bound = bound->get_str();
  }

  mpz_class previous = -1;
  for (unsigned d = 0; d <= opts.max_degree; ++d) {
    DegreeOutcome st;
    st.degree = d;
    try {
      const mpz_class count = total_basis_count(ps, d, opts);
      if (count == previous) {
        st.outcome = DegreeOutcome::Kind::unchanged;
        report.degrees.push_back(st);
        report.searched_degree = d;
        continue;
      }
      previous = count;
      auto cert = find_certificate(ps, d, opts, &st);
      report.degrees.push_back(st);
      report.searched_degree = d;
      if (cert) {
        report.verdict = Verdict::infeasible_proven;
        report.certificate = std::move(cert);
        return report;
      }
    } catch (const ResourceError& e) {
      report.resource_abort = std::string(e.what()) + (e.progress().empty() ? "" : " [" + e.progress() + "]");
      report.verdict = Verdict::undecided;
      return report;
    }
  }

  // Feasibility follows only from an exhaustive exact search up to a degree
  // that covers every multiplier of total degree <= K.
  if (bound && opts.arithmetic == fock::Arithmetic::exact && opts.gamma_in_beta) {
    mpz_class needed = *bound;
    if (opts.measure == DegreeMeasure::matrix) needed *= ps.photons;
    if (mpz_class(opts.max_degree) >= needed) report.verdict = Verdict::feasible_proven;
  }
  if (report.verdict == Verdict::undecided && !single)
    report.note = "feasibility is never claimed for multi-pair systems";
  return report;
}

VerifyResult verify_certificate(const PolynomialSystem& ps, const Certificate& cert) {
  VerifyResult out;
  if (cert.betas.size() != ps.size()) {
    out.diagnostic = "certificate has " + std::to_string(cert.betas.size()) + " multipliers, system has " +
                     std::to_string(ps.size()) + " equations";
    return out;
  }
  if (!cert.space || !(*cert.space == *ps.space)) {
    out.diagnostic = "certificate variable table differs from the system's";
    return out;
  }
  MultiPoly sum(ps.space);
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (cert.betas[k].is_zero()) continue;
    MultiPoly beta(ps.space);
    for (const auto& [e, c] : cert.betas[k].terms()) beta.add_term(e, c);
    sum += poly_mul(beta, ps.equations[k].poly);
  }
  sum.add_term(ExponentTuple(ps.space->size()), GaussianRational(-1));
  if (sum.is_zero()) {
    out.ok = true;
    return out;
  }
  const auto& [e, c] = *sum.terms().begin();
  const GaussianRational actual = e.degree() == 0 ? c + GaussianRational(1) : c;
  const GaussianRational expected = e.degree() == 0 ? GaussianRational(1) : GaussianRational();
  out.diagnostic = "sum of beta_k f_k differs from 1 at monomial " + format_monomial(*ps.space, e) + ": coefficient " +
                   actual.to_string() + ", expected " + expected.to_string();
  return out;
}

}  // namespace nullcert::nulla
