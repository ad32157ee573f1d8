#include "nnelast/solve.hpp"

#include <chrono>
#include <vector>

#include <Eigen/UmfPackSupport>

#include "nnelast/errors.hpp"

namespace nnelast {

namespace {

// 64-bit indices: the condensed factor exceeds the 32-bit interface at n = 16.
using SparseLong = Eigen::SparseMatrix<double, Eigen::ColMajor, SuiteSparse_long>;
using SparseLU = Eigen::UmfPackLU<SparseLong>;

// Symmetric pattern, nested-dissection ordering.
void configure(SparseLU& lu) {
  lu.umfpackControl()(UMFPACK_STRATEGY) = UMFPACK_STRATEGY_SYMMETRIC;
  lu.umfpackControl()(UMFPACK_ORDERING) = UMFPACK_ORDERING_METIS;
}

constexpr int kInterior = (kStressDofs - kFaceDofs) + kDisplacementDofs;
constexpr int kMaxBoundary = kFaceDofs + kLiftDofs;

using InteriorMatrix = Eigen::Matrix<double, kInterior, kInterior>;
using CouplingMatrix =
    Eigen::Matrix<double, kInterior, Eigen::Dynamic, 0, kInterior, kMaxBoundary>;
using BoundaryMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0,
                                     kMaxBoundary, kMaxBoundary>;

// Local view of one element split into eliminated (interior) unknowns
//   [stress 12..29 | displacement 0..11]
// and retained (boundary) unknowns
//   [face stress 0..11 | free lift dofs].
struct LocalBlocks {
  InteriorMatrix kii;
  CouplingMatrix kib;
  BoundaryMatrix kbb;
  std::array<int, kInterior> interior_global{};
  std::vector<int> boundary_reduced;  ///< index into the reduced system
  std::vector<int> boundary_global;
};

LocalBlocks local_blocks(const SaddleSystem& sys, int e) {
  const ElementMatrices& em = sys.elements[e];
  const GlobalDofMap& map = sys.map;
  const auto& sg = map.stress_gather[e];
  const auto& ug = map.displacement_gather[e];
  const auto& tg = map.trace_gather[e];
  const int face_block =
      map.num_stress -
      (kVolumeDofs + kDivDofs) * static_cast<int>(sys.elements.size());

  LocalBlocks lb;
  std::vector<int> lift_local;
  for (int k = 0; k < kFaceDofs; ++k) {
    lb.boundary_global.push_back(sg[k]);
    lb.boundary_reduced.push_back(sg[k] - map.stress_offset);
  }
  for (int j = 0; j < kLiftDofs; ++j) {
    if (tg[j] < 0) continue;
    lift_local.push_back(j);
    lb.boundary_global.push_back(tg[j]);
    lb.boundary_reduced.push_back(face_block + tg[j] - map.trace_offset);
  }
  const int nb = static_cast<int>(lb.boundary_global.size());
  const int ns = kStressDofs - kFaceDofs;

  for (int i = 0; i < ns; ++i) lb.interior_global[i] = sg[kFaceDofs + i];
  for (int j = 0; j < kDisplacementDofs; ++j) {
    lb.interior_global[ns + j] = ug[j];
  }

  lb.kii.setZero();
  lb.kii.topLeftCorner(ns, ns) = em.a.bottomRightCorner(ns, ns);
  lb.kii.topRightCorner(ns, kDisplacementDofs) =
      em.b.bottomRows(ns);
  lb.kii.bottomLeftCorner(kDisplacementDofs, ns) =
      em.b.bottomRows(ns).transpose();

  lb.kib.setZero(kInterior, nb);
  lb.kib.topLeftCorner(ns, kFaceDofs) = em.a.bottomLeftCorner(ns, kFaceDofs);
  lb.kib.bottomLeftCorner(kDisplacementDofs, kFaceDofs) =
      em.b.topRows(kFaceDofs).transpose();
  for (size_t s = 0; s < lift_local.size(); ++s) {
    lb.kib.block(0, kFaceDofs + s, ns, 1) =
        em.c.col(lift_local[s]).tail(ns);
  }

  lb.kbb.setZero(nb, nb);
  lb.kbb.topLeftCorner(kFaceDofs, kFaceDofs) =
      em.a.topLeftCorner(kFaceDofs, kFaceDofs);
  for (size_t s = 0; s < lift_local.size(); ++s) {
    const auto col = em.c.col(lift_local[s]).head(kFaceDofs);
    lb.kbb.block(0, kFaceDofs + s, kFaceDofs, 1) = col;
    lb.kbb.block(kFaceDofs + s, 0, 1, kFaceDofs) = col.transpose();
  }
  return lb;
}

Eigen::FullPivLU<InteriorMatrix> factor_interior(const LocalBlocks& lb, int e) {
  Eigen::FullPivLU<InteriorMatrix> lu(lb.kii);
  if (lu.rank() < kInterior) {
    throw SolverBreakdown("element " + std::to_string(e) +
                          ": singular interior block (rank " +
                          std::to_string(lu.rank()) + ")");
  }
  return lu;
}

class CondensedSolver {
 public:
  explicit CondensedSolver(const SaddleSystem& sys) : sys_(sys) {
    const int nt = static_cast<int>(sys.elements.size());
    faces_ = sys.map.num_stress - (kVolumeDofs + kDivDofs) * nt;
    n_ = faces_ + sys.map.num_trace;

    std::vector<Eigen::Triplet<double, SuiteSparse_long>> trip;
    trip.reserve(static_cast<size_t>(nt) * kMaxBoundary * kMaxBoundary);
    for (int e = 0; e < nt; ++e) {
      const LocalBlocks lb = local_blocks(sys, e);
      const auto lu = factor_interior(lb, e);
      const CouplingMatrix x = lu.solve(lb.kib);
      const BoundaryMatrix s = lb.kbb - lb.kib.transpose() * x;
      const int nb = static_cast<int>(lb.boundary_reduced.size());
      for (int a = 0; a < nb; ++a) {
        for (int b = 0; b < nb; ++b) {
          trip.emplace_back(lb.boundary_reduced[a], lb.boundary_reduced[b],
                            s(a, b));
        }
      }
    }
    reduced_.resize(n_, n_);
    reduced_.setFromTriplets(trip.begin(), trip.end());
    reduced_.makeCompressed();
    configure(lu_);
    lu_.compute(reduced_);
    if (lu_.info() != Eigen::Success) {
      throw SolverBreakdown(
          "sparse LU of the condensed system failed (UMFPACK status " +
          std::to_string(lu_.umfpackFactorizeReturncode()) + ")");
    }
  }

  Eigen::VectorXd solve(const Eigen::VectorXd& b) const {
    const int nt = static_cast<int>(sys_.elements.size());
    Eigen::VectorXd g(n_);
    for (int i = 0; i < faces_; ++i) g[i] = b[sys_.map.stress_offset + i];
    for (int i = 0; i < sys_.map.num_trace; ++i) {
      g[faces_ + i] = b[sys_.map.trace_offset + i];
    }

    for (int e = 0; e < nt; ++e) {
      const LocalBlocks lb = local_blocks(sys_, e);
      const auto lu = factor_interior(lb, e);
      Eigen::Matrix<double, kInterior, 1> bi;
      for (int i = 0; i < kInterior; ++i) bi[i] = b[lb.interior_global[i]];
      const Eigen::VectorXd corr = lb.kib.transpose() * lu.solve(bi);
      for (size_t a = 0; a < lb.boundary_reduced.size(); ++a) {
        g[lb.boundary_reduced[a]] -= corr[a];
      }
    }

    const Eigen::VectorXd xb = lu_.solve(g);
    if (lu_.info() != Eigen::Success) {
      throw SolverBreakdown("sparse LU solve failed");
    }

    Eigen::VectorXd x = Eigen::VectorXd::Zero(sys_.map.total);
    for (int i = 0; i < faces_; ++i) x[sys_.map.stress_offset + i] = xb[i];
    for (int i = 0; i < sys_.map.num_trace; ++i) {
      x[sys_.map.trace_offset + i] = xb[faces_ + i];
    }
    for (int e = 0; e < nt; ++e) {
      const LocalBlocks lb = local_blocks(sys_, e);
      const auto lu = factor_interior(lb, e);
      Eigen::Matrix<double, kInterior, 1> bi;
      for (int i = 0; i < kInterior; ++i) bi[i] = b[lb.interior_global[i]];
      Eigen::VectorXd xbl(lb.boundary_reduced.size());
      for (size_t a = 0; a < lb.boundary_reduced.size(); ++a) {
        xbl[a] = xb[lb.boundary_reduced[a]];
      }
      const Eigen::Matrix<double, kInterior, 1> xi =
          lu.solve(bi - lb.kib * xbl);
      for (int i = 0; i < kInterior; ++i) x[lb.interior_global[i]] = xi[i];
    }
    return x;
  }

  Eigen::Index size() const { return n_; }
  Eigen::Index nonzeros() const { return reduced_.nonZeros(); }

 private:
  const SaddleSystem& sys_;
  int faces_ = 0;
  int n_ = 0;
  SparseLong reduced_;
  SparseLU lu_;
};

void check_residual(SolveReport& report, double rhs_norm, double tolerance) {
  report.relative_residual = rhs_norm > 0
                                 ? report.absolute_residual / rhs_norm
                                 : report.absolute_residual;
  if (!(report.relative_residual <= tolerance)) {
    throw ToleranceNotReached(
        "relative residual " + std::to_string(report.relative_residual) +
            " exceeds tolerance " + std::to_string(tolerance),
        report.relative_residual);
  }
}

}  // namespace

SolveResult solve(const SaddleSystem& system, double tolerance) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  result.report.method = "element condensation + sparse LU";
  const double rhs_norm = system.rhs.norm();
  if (rhs_norm == 0.0) {
    result.x = Eigen::VectorXd::Zero(system.size());
    result.report.seconds = 0;
    return result;
  }

  const CondensedSolver solver(system);
  result.report.reduced_size = solver.size();
  result.report.reduced_nonzeros = solver.nonzeros();
  result.x = solver.solve(system.rhs);
  Eigen::VectorXd r = system.rhs - system.apply(result.x);
  result.report.absolute_residual = r.norm();

  constexpr int kMaxRefinement = 3;
  while (result.report.absolute_residual > tolerance * rhs_norm &&
         result.report.refinement_steps < kMaxRefinement) {
    result.x += solver.solve(r);
    r = system.rhs - system.apply(result.x);
    result.report.absolute_residual = r.norm();
    ++result.report.refinement_steps;
  }
  result.report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  check_residual(result.report, rhs_norm, tolerance);
  return result;
}

SolveResult solve_sparse(const Eigen::SparseMatrix<double>& k,
                         const Eigen::VectorXd& rhs, double tolerance) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  result.report.method = "sparse LU";
  result.report.reduced_size = k.rows();
  result.report.reduced_nonzeros = k.nonZeros();
  const double rhs_norm = rhs.norm();
  if (rhs_norm == 0.0) {
    result.x = Eigen::VectorXd::Zero(k.cols());
    return result;
  }
  SparseLong kc = k;
  kc.makeCompressed();
  SparseLU lu;
  configure(lu);
  lu.compute(kc);
  if (lu.info() != Eigen::Success) {
    throw SolverBreakdown("sparse LU factorization failed (UMFPACK status " +
                          std::to_string(lu.umfpackFactorizeReturncode()) +
                          ")");
  }
  result.x = lu.solve(rhs);
  if (lu.info() != Eigen::Success || !result.x.allFinite()) {
    throw SolverBreakdown("sparse LU solve failed");
  }
  result.report.absolute_residual = (rhs - k * result.x).norm();
  result.report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  check_residual(result.report, rhs_norm, tolerance);
  return result;
}

}  // namespace nnelast
