#pragma once

#include <array>

#include <Eigen/Dense>

#include "nnelast/barycentric.hpp"
#include "nnelast/tet_geometry.hpp"

namespace nnelast {

// Local degrees of freedom of the 30-dimensional stress element, in order:
//   [0, 12)   face moments |F| <n.tau n, lambda_v>_F, face f major, the three
//             face vertices v ascending
//   [12, 18)  volume moments int_T tau_c, c in xx yy zz xy xz yz
//   [18, 30)  divergence moments (div tau, lambda_j e_d)_T, j major, d minor
inline constexpr int kStressDofs = 30;
inline constexpr int kFaceDofs = 12;
inline constexpr int kVolumeDofs = 6;
inline constexpr int kDivDofs = 12;
inline constexpr int kFaceDofBegin = 0;
inline constexpr int kVolumeDofBegin = 12;
inline constexpr int kDivDofBegin = 18;

using DofVector = Eigen::Matrix<double, kStressDofs, 1>;
using DofMatrix = Eigen::Matrix<double, kStressDofs, kStressDofs>;

struct DofLabel {
  enum class Kind { Face, Volume, Divergence };
  Kind kind;
  int face = -1;       ///< Face: local face index
  int vertex = -1;     ///< Face: local vertex of the Lagrange weight; Div: j
  int component = -1;  ///< Volume: tensor component; Div: direction d
};

const std::array<DofLabel, kStressDofs>& dof_labels();

/// T_1..T_4 (normal-normal dual to the faces) and T_5, T_6 (vanishing
/// normal-normal components on every face).
struct NNTensorBasis {
  std::array<SymTensor, 6> t;
};

NNTensorBasis build_nn_tensors(const TetGeometry& g);

using SpanningSet = std::array<TensorPoly, kStressDofs>;

/// T_i p for p in P^1 + span{lambda_i lambda_(i+1), lambda_i lambda_(i+2),
/// lambda_i lambda_(i+3)} (seven per i), followed by T_5 and T_6.
SpanningSet spanning_basis(const TetGeometry& g, const NNTensorBasis& nn);

/// All 30 functionals applied to a polynomial, integrated exactly.
DofVector evaluate_dofs(const TetGeometry& g, const TensorPoly& tau);

/// Entry (k, l) is dof_k(span_l).
DofMatrix dof_matrix(const TetGeometry& g, const SpanningSet& span);

/// Nodal basis dual to the local degrees of freedom on one element.
struct StressShapeSet {
  TetGeometry geom;
  std::array<TensorPoly, kStressDofs> shapes;

  /// Coefficient vector c -> polynomial sum_k c_k shape_k.
  TensorPoly combine(const DofVector& c) const;
};

/// Throws SingularDofMatrix if the DOF matrix is not invertible.
StressShapeSet nodal_basis(const TetGeometry& g);

/// Elimination system from the unisolvence argument: unknowns phi_i(x_j),
/// j != i, with t_ij = T_i grad_j and tt_ij = t_ij - t_ii.
struct ReducedSystem {
  Eigen::Matrix<double, 12, 12> matrix;
  double determinant = 0;
  std::array<std::array<Vec3, 4>, 4> t;        ///< t[i][j] = T_i grad_j
  std::array<std::array<Vec3, 4>, 4> t_tilde;  ///< t_ij - t_ii
};

ReducedSystem reduced_matrix_12(const TetGeometry& g);

SymTensor evaluate(const TetGeometry& g, const TensorPoly& tau, const Vec3& x);
Vec3 divergence(const TetGeometry& g, const TensorPoly& tau, const Vec3& x);

}  // namespace nnelast
