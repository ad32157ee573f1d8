#include "nnelast/affine_map.hpp"

#include <cmath>

namespace nnelast {

namespace {
Mat3 edge_matrix(const Tet& t) {
  Mat3 m;
  for (int k = 0; k < 3; ++k) m.col(k) = t.vertices[k + 1] - t.vertices[0];
  return m;
}
}  // namespace

Vec3 AffineMap::inverse(const Vec3& x) const {
  return b.partialPivLu().solve(x - a);
}

AffineMap map_from_tets(const Tet& ref, const Tet& phys) {
  // Both calls throw DegenerateTet.
  (void)geometry(ref);
  (void)geometry(phys);
  AffineMap m;
  m.b = edge_matrix(phys) * edge_matrix(ref).inverse();
  m.a = phys.vertices[0] - m.b * ref.vertices[0];
  m.jacobian = m.b.determinant();
  return m;
}

SymTensor push_stress(const AffineMap& m, const SymTensor& tau_hat) {
  return congruence(m.b, tau_hat) / (m.jacobian * m.jacobian);
}

TensorPoly push_stress(const AffineMap& m, const TensorPoly& tau_hat) {
  TensorPoly out;
  for (int k = 0; k < kNumMonomials; ++k) {
    const SymTensor c = push_stress(m, tau_hat.coefficient(k));
    for (int comp = 0; comp < 6; ++comp) out.coeffs(k, comp) = c[comp];
  }
  return out;
}

SymTensor push_constant_dual(const AffineMap& m, const SymTensor& c_hat) {
  const Mat3 binv_t = m.b.inverse().transpose();
  return std::abs(m.jacobian) * congruence(binv_t, c_hat);
}

Vec3 push_vector_dual(const AffineMap& m, const Vec3& v_hat) {
  return std::abs(m.jacobian) * m.b.inverse().transpose() * v_hat;
}

VertexVectors push_vector_dual(const AffineMap& m, const VertexVectors& v_hat) {
  const Mat3 t = std::abs(m.jacobian) * m.b.inverse().transpose();
  return (t * v_hat.transpose()).transpose();
}

}  // namespace nnelast
