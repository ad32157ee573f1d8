#include "nnelast/dof_map.hpp"

#include <algorithm>

namespace nnelast {

GlobalDofMap build_dof_map(const TetMesh& mesh) {
  GlobalDofMap map;
  const int nt = mesh.num_tets();
  const int nf = mesh.num_faces();
  const int nv = mesh.num_vertices();

  map.num_stress = 3 * nf + (kVolumeDofs + kDivDofs) * nt;
  map.num_displacement = kDisplacementDofs * nt;
  map.dirichlet = mesh.boundary_vertex;
  map.trace_index.assign(nv, -1);

  map.stress_offset = 0;
  map.displacement_offset = map.num_stress;
  map.trace_offset = map.displacement_offset + map.num_displacement;
  int next = map.trace_offset;
  for (int v = 0; v < nv; ++v) {
    if (map.dirichlet[v]) continue;
    map.trace_index[v] = next;
    next += 3;
  }
  map.num_trace = next - map.trace_offset;
  map.total = next;

  map.stress_gather.resize(nt);
  map.displacement_gather.resize(nt);
  map.trace_gather.resize(nt);
  const int interior_begin = 3 * nf;
  for (int e = 0; e < nt; ++e) {
    const auto& tet = mesh.tets[e];
    auto& sg = map.stress_gather[e];
    for (int f = 0; f < 4; ++f) {
      const int face = mesh.tet_faces[e][f];
      const auto& key = mesh.faces[face].vertices;
      const auto lv = face_vertices(f);
      for (int s = 0; s < 3; ++s) {
        const int global_vertex = tet[lv[s]];
        const int pos = static_cast<int>(
            std::find(key.begin(), key.end(), global_vertex) - key.begin());
        sg[kFaceDofBegin + 3 * f + s] =
            map.stress_offset + map.face_dof(face, pos);
      }
    }
    for (int k = kVolumeDofBegin; k < kStressDofs; ++k) {
      sg[k] = map.stress_offset + interior_begin +
              (kVolumeDofs + kDivDofs) * e + (k - kVolumeDofBegin);
    }
    for (int k = 0; k < kDisplacementDofs; ++k) {
      map.displacement_gather[e][k] =
          map.displacement_offset + kDisplacementDofs * e + k;
    }
    for (int j = 0; j < 4; ++j) {
      const int base = map.trace_index[tet[j]];
      for (int d = 0; d < 3; ++d) {
        map.trace_gather[e][3 * j + d] = base < 0 ? -1 : base + d;
      }
    }
  }
  return map;
}

AffineField trace_lift(const TetGeometry& g, const VertexVectors& w) {
  AffineField field;
  field.values = w;
  for (int j = 0; j < 4; ++j) {
    field.gradient += w.row(j).transpose() * g.grad[j].transpose();
  }
  return field;
}

double lift_coupling(const TetGeometry& g, const AffineField& w,
                     const TensorPoly& tau) {
  const double strain_part = g.volume * frobenius(w.strain(), tau.mean());
  // (w, div tau)_T with both factors affine:
  // int lambda_j lambda_k = |T| (1 + delta_jk) / 20.
  const VertexVectors div = tau.divergence(g.grad);
  double div_part = 0;
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      div_part += (j == k ? 2.0 : 1.0) * w.values.row(j).dot(div.row(k));
    }
  }
  return strain_part + div_part * g.volume / 20.0;
}

void TraceField::set_free(const GlobalDofMap& map,
                          const Eigen::VectorXd& solution) {
  for (size_t v = 0; v < values.size(); ++v) {
    const int base = map.trace_index[v];
    if (base < 0) continue;
    values[v] = solution.segment<3>(base);
  }
}

VertexVectors TraceField::element_values(const TetMesh& mesh, int e) const {
  VertexVectors w;
  for (int j = 0; j < 4; ++j) w.row(j) = values[mesh.tets[e][j]].transpose();
  return w;
}

TraceField apply_dirichlet(const std::function<Vec3(const Vec3&)>& g_d,
                           const TetMesh& mesh, const GlobalDofMap& map) {
  TraceField t;
  t.values.assign(mesh.vertices.size(), Vec3::Zero());
  t.fixed = map.dirichlet;
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    if (map.dirichlet[v]) t.values[v] = g_d(mesh.vertices[v]);
  }
  return t;
}

}  // namespace nnelast
