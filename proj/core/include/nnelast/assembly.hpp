#pragma once

#include <filesystem>
#include <functional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "nnelast/dof_map.hpp"
#include "nnelast/element.hpp"
#include "nnelast/mesh.hpp"
#include "nnelast/symtensor.hpp"

namespace nnelast {

using VectorField = std::function<Vec3(const Vec3&)>;

/// Element contributions to the saddle-point system. Rows are the 30 local
/// stress shapes; columns of b and c are lambda_j e_d (j major).
struct ElementMatrices {
  Eigen::Matrix<double, kStressDofs, kStressDofs> a;  ///< (A phi_l, phi_k)_T
  Eigen::Matrix<double, kStressDofs, kDisplacementDofs> b;  ///< (psi_j, div phi_k)
  Eigen::Matrix<double, kStressDofs, kLiftDofs> c;  ///< -<gamma(w_j), phi_k>
  Eigen::Matrix<double, kDisplacementDofs, 1> f;    ///< (f, psi_j), 4-pt rule
};

/// Integrals of polynomial integrands are exact; the load uses the 4-point
/// rule. A null `load` means f = 0.
ElementMatrices element_matrices(const StressShapeSet& shapes,
                                 const Material& material,
                                 const VectorField& load);

/// K = [[A, B, C], [B^T, 0, 0], [C^T, 0, 0]],
/// rhs = [-C_D g, -f, 0] where g are the prescribed Dirichlet trace values.
///
/// Element blocks are kept; the global sparse matrix is built on request.
struct SaddleSystem {
  GlobalDofMap map;
  std::vector<ElementMatrices> elements;
  Eigen::VectorXd rhs;
  /// Prescribed vertex values (zero where free).
  std::vector<Vec3> dirichlet_values;

  int size() const { return map.total; }
  Eigen::SparseMatrix<double> matrix() const;
  /// K x without forming K.
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
};

SaddleSystem assemble(const TetMesh& mesh, const GlobalDofMap& map,
                      const Material& material, const VectorField& load,
                      const TraceField& dirichlet);

/// Homogeneous Dirichlet data.
SaddleSystem assemble(const TetMesh& mesh, const GlobalDofMap& map,
                      const Material& material, const VectorField& load);

/// "row col value" per line, 0-based, 17 significant digits.
void export_coordinate(const Eigen::SparseMatrix<double>& k,
                       const std::filesystem::path& path);
void export_vector(const Eigen::VectorXd& v, const std::filesystem::path& path);

}  // namespace nnelast
