#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "nnelast/assembly.hpp"
#include "nnelast/dof_map.hpp"
#include "nnelast/element.hpp"
#include "nnelast/mesh.hpp"
#include "nnelast/quadrature.hpp"

namespace nnelast {

/// A stress field with pointwise values and divergence.
struct TensorField {
  std::function<SymTensor(const Vec3&)> value;
  std::function<Vec3(const Vec3&)> divergence;
};

/// Piecewise affine vector field, one set of vertex values per tet.
struct ElementP1Field {
  std::vector<VertexVectors> values;
};

/// L2 projection onto P1(T; R^3) on a single element.
VertexVectors project_p1(const TetGeometry& g, const VectorField& v,
                         QuadKind rule = QuadKind::Deg5Point14);
ElementP1Field project_p1(const VectorField& v, const TetMesh& mesh,
                          QuadKind rule = QuadKind::Deg5Point14);

/// int_T |sum_k lambda_k v_k|^2
double affine_l2_norm_squared(const TetGeometry& g, const VertexVectors& v);

/// Global stress coefficients over the stress block of a GlobalDofMap.
/// Interior faces carry one set of moments, so n.tau n is continuous.
struct DiscreteStressField {
  Eigen::VectorXd coeffs;

  DofVector element_dofs(const GlobalDofMap& map, int e) const;
  TensorPoly element(const GlobalDofMap& map, int e,
                     const StressShapeSet& shapes) const;
};

/// Gathers the stress block of a full solution vector.
DiscreteStressField stress_from_solution(const GlobalDofMap& map,
                                         const Eigen::VectorXd& solution);

/// The 30 moments of a field on one element by degree-5 face and volume
/// quadrature (exact for polynomial fields of degree <= 4).
DofVector field_dofs(const TetGeometry& g, const TensorField& tau);

/// Interpolation I_nn: evaluates all moments and expands in the nodal basis.
/// Interior-face moments are evaluated once, on the first owner.
DiscreteStressField interpolate_nn(const TensorField& tau, const TetMesh& mesh,
                                   const GlobalDofMap& map);

/// max_T || div(I_nn tau) - Pi^1 div tau ||_T
double check_commuting(const TensorField& tau, const TetMesh& mesh,
                       const GlobalDofMap& map);

}  // namespace nnelast
