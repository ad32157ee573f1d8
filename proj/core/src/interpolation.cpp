#include "nnelast/interpolation.hpp"

#include <algorithm>

namespace nnelast {

namespace {

// Inverse of the P1 mass matrix M_jk = |T| (1 + delta_jk) / 20 times |T|.
const Eigen::Matrix4d& p1_mass_inverse_scaled() {
  static const Eigen::Matrix4d inv = [] {
    const Eigen::Matrix4d m =
        (Eigen::Matrix4d::Identity() + Eigen::Matrix4d::Ones()) / 20.0;
    return Eigen::Matrix4d(m.inverse());
  }();
  return inv;
}

// Moments |F| <n.tau n, lambda_v>_F of face f for its three vertices, in
// ascending local vertex order.
Eigen::Vector3d face_moments(const TetGeometry& g, int f,
                             const TensorField& tau) {
  const auto fv = face_vertices(f);
  const FaceQuadratureRule& q = face_rule_deg5();
  Eigen::Vector3d m = Eigen::Vector3d::Zero();
  for (size_t p = 0; p < q.points.size(); ++p) {
    const auto& mu = q.points[p];
    const Vec3 x =
        mu[0] * g.vertices[fv[0]] + mu[1] * g.vertices[fv[1]] +
        mu[2] * g.vertices[fv[2]];
    const double nn = normal_normal(tau.value(x), g.normal[f]);
    for (int s = 0; s < 3; ++s) m[s] += q.weights[p] * nn * mu[s];
  }
  return m * (g.face_area[f] * g.face_area[f]);
}

}  // namespace

VertexVectors project_p1(const TetGeometry& g, const VectorField& v,
                         QuadKind rule) {
  const QuadratureRule& q = quad_rule(rule);
  VertexVectors rhs = VertexVectors::Zero();
  for (size_t p = 0; p < q.points.size(); ++p) {
    const Barycentric& l = q.points[p];
    const Vec3 val = v(g.point(l));
    for (int j = 0; j < 4; ++j) {
      rhs.row(j) += q.weights[p] * l[j] * val.transpose();
    }
  }
  // rhs holds (v, lambda_j)_T / |T|
  return p1_mass_inverse_scaled() * rhs;
}

ElementP1Field project_p1(const VectorField& v, const TetMesh& mesh,
                          QuadKind rule) {
  ElementP1Field out;
  out.values.reserve(mesh.tets.size());
  for (int e = 0; e < mesh.num_tets(); ++e) {
    out.values.push_back(project_p1(geometry(mesh.tet(e)), v, rule));
  }
  return out;
}

double affine_l2_norm_squared(const TetGeometry& g, const VertexVectors& v) {
  const Eigen::RowVector3d sum = v.colwise().sum();
  return g.volume / 20.0 * (v.squaredNorm() + sum.squaredNorm());
}

DofVector DiscreteStressField::element_dofs(const GlobalDofMap& map,
                                            int e) const {
  DofVector d;
  const auto& sg = map.stress_gather[e];
  for (int k = 0; k < kStressDofs; ++k) d[k] = coeffs[sg[k] - map.stress_offset];
  return d;
}

TensorPoly DiscreteStressField::element(const GlobalDofMap& map, int e,
                                        const StressShapeSet& shapes) const {
  return shapes.combine(element_dofs(map, e));
}

DiscreteStressField stress_from_solution(const GlobalDofMap& map,
                                         const Eigen::VectorXd& solution) {
  return {solution.segment(map.stress_offset, map.num_stress)};
}

DofVector field_dofs(const TetGeometry& g, const TensorField& tau) {
  DofVector d;
  for (int f = 0; f < 4; ++f) {
    d.segment<3>(kFaceDofBegin + 3 * f) = face_moments(g, f, tau);
  }
  const QuadratureRule& q = quad_rule(QuadKind::Deg5Point14);
  d.segment<kVolumeDofs + kDivDofs>(kVolumeDofBegin).setZero();
  for (size_t p = 0; p < q.points.size(); ++p) {
    const Barycentric& l = q.points[p];
    const Vec3 x = g.point(l);
    const double w = q.weights[p] * g.volume;
    const SymTensor t = tau.value(x);
    for (int c = 0; c < kVolumeDofs; ++c) d[kVolumeDofBegin + c] += w * t[c];
    const Vec3 div = tau.divergence(x);
    for (int j = 0; j < 4; ++j) {
      d.segment<3>(kDivDofBegin + 3 * j) += (w * l[j]) * div;
    }
  }
  return d;
}

DiscreteStressField interpolate_nn(const TensorField& tau, const TetMesh& mesh,
                                   const GlobalDofMap& map) {
  DiscreteStressField out;
  out.coeffs = Eigen::VectorXd::Zero(map.num_stress);

  for (int face = 0; face < mesh.num_faces(); ++face) {
    const MeshFace& mf = mesh.faces[face];
    const int e = mf.owner[0];
    const int f = mf.local_face[0];
    const TetGeometry g = geometry(mesh.tet(e));
    const Eigen::Vector3d m = face_moments(g, f, tau);
    const auto lv = face_vertices(f);
    for (int s = 0; s < 3; ++s) {
      const int gv = mesh.tets[e][lv[s]];
      const int pos = static_cast<int>(
          std::find(mf.vertices.begin(), mf.vertices.end(), gv) -
          mf.vertices.begin());
      out.coeffs[map.face_dof(face, pos)] = m[s];
    }
  }

  for (int e = 0; e < mesh.num_tets(); ++e) {
    const TetGeometry g = geometry(mesh.tet(e));
    // Face moments are recomputed here but only the interior ones are kept.
    const DofVector d = field_dofs(g, tau);
    const auto& sg = map.stress_gather[e];
    for (int k = kVolumeDofBegin; k < kStressDofs; ++k) {
      out.coeffs[sg[k] - map.stress_offset] = d[k];
    }
  }
  return out;
}

double check_commuting(const TensorField& tau, const TetMesh& mesh,
                       const GlobalDofMap& map) {
  const DiscreteStressField interp = interpolate_nn(tau, mesh, map);
  double worst = 0;
  for (int e = 0; e < mesh.num_tets(); ++e) {
    const TetGeometry g = geometry(mesh.tet(e));
    const StressShapeSet shapes = nodal_basis(g);
    const VertexVectors div_interp =
        interp.element(map, e, shapes).divergence(g.grad);
    const VertexVectors proj = project_p1(g, tau.divergence);
    worst = std::max(worst, std::sqrt(affine_l2_norm_squared(
                                g, div_interp - proj)));
  }
  return worst;
}

}  // namespace nnelast
