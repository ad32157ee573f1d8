#pragma once

#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "nnelast/assembly.hpp"

namespace nnelast {

struct SolveReport {
  std::string method;
  double relative_residual = 0;  ///< |Kx - b| / |b| (absolute if b == 0)
  double absolute_residual = 0;
  Eigen::Index reduced_size = 0;  ///< unknowns seen by the sparse factorization
  Eigen::Index reduced_nonzeros = 0;
  int refinement_steps = 0;
  double seconds = 0;
};

struct SolveResult {
  Eigen::VectorXd x;
  SolveReport report;
};

/// Solves the saddle-point system. Element-local unknowns (the 18 interior
/// stress moments and the 12 displacement coefficients of each tet) are
/// eliminated element by element; the remaining face/trace system is
/// factored by sparse LU and the eliminated unknowns recovered. The
/// residual is always measured against the full system.
///
/// Throws SolverBreakdown on a singular factorization and
/// ToleranceNotReached if the relative residual exceeds `tolerance`.
SolveResult solve(const SaddleSystem& system, double tolerance = 1e-9);

/// Direct sparse LU on an arbitrary square system; same error contract.
SolveResult solve_sparse(const Eigen::SparseMatrix<double>& k,
                         const Eigen::VectorXd& rhs, double tolerance = 1e-9);

}  // namespace nnelast
