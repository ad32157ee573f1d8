#pragma once

#include <array>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "nnelast/barycentric.hpp"
#include "nnelast/element.hpp"
#include "nnelast/mesh.hpp"

namespace nnelast {

inline constexpr int kDisplacementDofs = 12;  ///< lambda_j e_d, j major
inline constexpr int kLiftDofs = 12;          ///< lambda_j e_d, j major

/// Global numbering of the three unknown blocks
///   [stress | displacement | trace].
/// Stress: 3 per face (face id x face-vertex position), then 18 per tet.
/// Displacement: 12 per tet (discontinuous P1). Trace: 3 per vertex not on
/// the Dirichlet boundary.
struct GlobalDofMap {
  int num_stress = 0;
  int num_displacement = 0;
  int num_trace = 0;
  int stress_offset = 0;
  int displacement_offset = 0;
  int trace_offset = 0;
  int total = 0;

  std::vector<bool> dirichlet;   ///< per vertex
  std::vector<int> trace_index;  ///< per vertex: first global index, or -1

  std::vector<std::array<int, kStressDofs>> stress_gather;
  std::vector<std::array<int, kDisplacementDofs>> displacement_gather;
  /// -1 marks a Dirichlet vertex.
  std::vector<std::array<int, kLiftDofs>> trace_gather;

  int face_dof(int face, int position) const { return 3 * face + position; }
};

/// All boundary vertices are Dirichlet vertices.
GlobalDofMap build_dof_map(const TetMesh& mesh);

/// Continuous piecewise-affine vector field on one element.
struct AffineField {
  VertexVectors values = VertexVectors::Zero();
  Mat3 gradient = Mat3::Zero();  ///< gradient(d, c) = d w_d / d x_c

  Vec3 at(const Barycentric& lambda) const {
    return evaluate_affine(values, lambda);
  }
  SymTensor strain() const { return SymTensor::from_matrix(gradient); }
};

AffineField trace_lift(const TetGeometry& g, const VertexVectors& w);

/// (eps(w), tau)_T + (w, div tau)_T
double lift_coupling(const TetGeometry& g, const AffineField& w,
                     const TensorPoly& tau);

/// Vertex values of the trace lift: prescribed on Dirichlet vertices, free
/// elsewhere.
struct TraceField {
  std::vector<Vec3> values;
  std::vector<bool> fixed;

  /// Copies the trace block of a global solution into the free values.
  void set_free(const GlobalDofMap& map, const Eigen::VectorXd& solution);
  VertexVectors element_values(const TetMesh& mesh, int e) const;
};

TraceField apply_dirichlet(const std::function<Vec3(const Vec3&)>& g_d,
                           const TetMesh& mesh, const GlobalDofMap& map);

}  // namespace nnelast
