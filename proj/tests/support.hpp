#pragma once

#include <algorithm>
#include <vector>

#include <Eigen/Eigenvalues>

#include "spinwit/spin_algebra.hpp"

namespace testing {

inline double max_abs(const spinwit::OperatorMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Eigen's own Hermitian solver, kept independent of the LAPACK path under test.
inline std::vector<double> reference_eigenvalues(const spinwit::OperatorMatrix& h) {
  Eigen::SelfAdjointEigenSolver<spinwit::OperatorMatrix> solver(h, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + h.rows());
  std::sort(values.begin(), values.end());
  return values;
}

inline bool all_close(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (std::abs(a[k] - b[k]) > tol) return false;
  return true;
}

inline spinwit::OperatorMatrix random_matrix(Eigen::Index dim, unsigned seed) {
  std::srand(seed);
  return spinwit::OperatorMatrix::Random(dim, dim);
}

}  // namespace testing
