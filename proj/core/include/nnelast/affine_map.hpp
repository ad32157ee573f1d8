#pragma once

#include "nnelast/barycentric.hpp"
#include "nnelast/tet_geometry.hpp"

namespace nnelast {

/// x = a + B x_hat, J = det B.
struct AffineMap {
  Vec3 a = Vec3::Zero();
  Mat3 b = Mat3::Identity();
  double jacobian = 1.0;

  Vec3 apply(const Vec3& x_hat) const { return a + b * x_hat; }
  Vec3 inverse(const Vec3& x) const;
};

/// The map sending ref.vertices[i] to phys.vertices[i]. Throws DegenerateTet.
AffineMap map_from_tets(const Tet& ref, const Tet& phys);

// Transformations between reference and physical element. Barycentric
// coordinates are preserved by the vertex-ordered map, so polynomial fields
// transform coefficient-wise.

/// tau = B tau_hat B^T / J^2 (re-scaled Piola-Kirchhoff).
SymTensor push_stress(const AffineMap& m, const SymTensor& tau_hat);
TensorPoly push_stress(const AffineMap& m, const TensorPoly& tau_hat);

/// c = |J| B^{-T} c_hat B^{-1}
SymTensor push_constant_dual(const AffineMap& m, const SymTensor& c_hat);

/// v = |J| B^{-T} v_hat (Piola).
Vec3 push_vector_dual(const AffineMap& m, const Vec3& v_hat);
VertexVectors push_vector_dual(const AffineMap& m, const VertexVectors& v_hat);

}  // namespace nnelast
