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

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>
#include <limits>

#include "linsolve/linsolve.hpp"
#include "util/error.hpp"

namespace nullcert::linsolve {

FloatOutcome solve_float(const SparseMatrix& m, const std::vector<GaussianRational>& b, double tol) {
  if (!(tol > 0.0)) throw ContractViolation("tolerance must be positive");
  if (b.size() != m.rows()) throw ContractViolation("right-hand side length does not match the row count");
  using Scalar = std::complex<double>;
  using Matrix = Eigen::SparseMatrix<Scalar, Eigen::ColMajor>;

  std::vector<Eigen::Triplet<Scalar>> entries;
  entries.reserve(m.nnz());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r))
      entries.emplace_back(static_cast<int>(r), static_cast<int>(c), v.to_complex());
  Matrix a(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  a.setFromTriplets(entries.begin(), entries.end());
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(m.rows()));
  for (std::size_t r = 0; r < m.rows(); ++r) rhs[static_cast<Eigen::Index>(r)] = b[r].to_complex();

  FloatOutcome out;
  if (m.cols() == 0) {
    out.converged = true;
    out.residual = rhs.norm();
    out.consistent_at_tol = out.residual <= tol;
    return out;
  }
  Eigen::LeastSquaresConjugateGradient<Matrix> solver;
  solver.setTolerance(std::max(tol * 1e-3, 1e-15));
  solver.setMaxIterations(std::max<Eigen::Index>(1000, 4 * static_cast<Eigen::Index>(m.cols())));
  solver.compute(a);
  Eigen::VectorXcd x = solver.solve(rhs);
  out.iterations = static_cast<long>(solver.iterations());
  out.converged = solver.info() == Eigen::Success;
  out.solution.assign(x.data(), x.data() + x.size());
  out.residual = out.converged ? (a * x - rhs).norm() : std::numeric_limits<double>::infinity();
  out.consistent_at_tol = out.residual <= tol;
  return out;
}

}  // namespace nullcert::linsolve
