#include "nnelast/element.hpp"

#include <sstream>

#include "nnelast/errors.hpp"

namespace nnelast {

namespace {

int mod4(int i) { return ((i % 4) + 4) % 4; }

std::array<DofLabel, kStressDofs> make_labels() {
  std::array<DofLabel, kStressDofs> labels{};
  for (int f = 0; f < 4; ++f) {
    const auto fv = face_vertices(f);
    for (int s = 0; s < 3; ++s) {
      labels[kFaceDofBegin + 3 * f + s] = {DofLabel::Kind::Face, f, fv[s], -1};
    }
  }
  for (int c = 0; c < kVolumeDofs; ++c) {
    labels[kVolumeDofBegin + c] = {DofLabel::Kind::Volume, -1, -1, c};
  }
  for (int j = 0; j < 4; ++j) {
    for (int d = 0; d < 3; ++d) {
      labels[kDivDofBegin + 3 * j + d] = {DofLabel::Kind::Divergence, -1, j,
                                          d};
    }
  }
  return labels;
}

}  // namespace

const std::array<DofLabel, kStressDofs>& dof_labels() {
  static const auto labels = make_labels();
  return labels;
}

NNTensorBasis build_nn_tensors(const TetGeometry& g) {
  NNTensorBasis nn;
  for (int i = 0; i < 4; ++i) {
    const Vec3& a = g.edge[mod4(i + 1)][mod4(i + 2)];
    const Vec3& b = g.edge[mod4(i + 1)][mod4(i + 3)];
    const double scale = g.normal[i].dot(a) * g.normal[i].dot(b);
    nn.t[i] = sym_outer(a, b) / scale;
  }
  nn.t[4] = sym_outer(g.edge[0][1], g.edge[2][3]);
  nn.t[5] = sym_outer(g.edge[0][2], g.edge[1][3]);
  return nn;
}

SpanningSet spanning_basis(const TetGeometry& /*g*/, const NNTensorBasis& nn) {
  SpanningSet span;
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    for (int l = 0; l < 4; ++l) {
      span[k++] = TensorPoly::from(nn.t[i], homogenized_linear(l));
    }
    for (int s = 1; s <= 3; ++s) {
      span[k++] = TensorPoly::from(nn.t[i], product_monomial(i, mod4(i + s)));
    }
  }
  span[k++] = TensorPoly::from(nn.t[4], homogenized_constant());
  span[k++] = TensorPoly::from(nn.t[5], homogenized_constant());
  return span;
}

DofVector evaluate_dofs(const TetGeometry& g, const TensorPoly& tau) {
  DofVector dofs;

  for (int f = 0; f < 4; ++f) {
    const auto fv = face_vertices(f);
    ScalarQuadratic nn;
    for (int m = 0; m < kNumMonomials; ++m) {
      nn[m] = normal_normal(tau.coefficient(m), g.normal[f]);
    }
    const double area = g.face_area[f];
    for (int s = 0; s < 3; ++s) {
      double sum = 0;
      for (int m = 0; m < kNumMonomials; ++m) {
        if (kMonomials[m].i == f || kMonomials[m].j == f) continue;
        std::array<int, 4> e{0, 0, 0, 0};
        ++e[kMonomials[m].i];
        ++e[kMonomials[m].j];
        ++e[fv[s]];
        sum += nn[m] * exact_face_integral({e[fv[0]], e[fv[1]], e[fv[2]]});
      }
      dofs[kFaceDofBegin + 3 * f + s] = area * area * sum;
    }
  }

  const SymTensor mean = tau.mean();
  for (int c = 0; c < kVolumeDofs; ++c) {
    dofs[kVolumeDofBegin + c] = g.volume * mean[c];
  }

  // (lambda_k, lambda_j)_T = |T| (1 + delta_kj) / 20
  const VertexVectors div = tau.divergence(g.grad);
  for (int j = 0; j < 4; ++j) {
    const Eigen::RowVector3d moment =
        (div.colwise().sum() + div.row(j)) * (g.volume / 20.0);
    for (int d = 0; d < 3; ++d) dofs[kDivDofBegin + 3 * j + d] = moment[d];
  }
  return dofs;
}

DofMatrix dof_matrix(const TetGeometry& g, const SpanningSet& span) {
  DofMatrix d;
  for (int l = 0; l < kStressDofs; ++l) d.col(l) = evaluate_dofs(g, span[l]);
  return d;
}

TensorPoly StressShapeSet::combine(const DofVector& c) const {
  TensorPoly p;
  for (int k = 0; k < kStressDofs; ++k) p.coeffs += c[k] * shapes[k].coeffs;
  return p;
}

StressShapeSet nodal_basis(const TetGeometry& g) {
  const SpanningSet span = spanning_basis(g, build_nn_tensors(g));
  const DofMatrix d = dof_matrix(g, span);
  const Eigen::FullPivLU<DofMatrix> lu(d);
  if (lu.rank() < kStressDofs) {
    std::ostringstream msg;
    msg << "DOF matrix has rank " << lu.rank() << " < " << kStressDofs;
    throw SingularDofMatrix(msg.str());
  }
  const DofMatrix inv = lu.inverse();

  StressShapeSet set;
  set.geom = g;
  for (int l = 0; l < kStressDofs; ++l) {
    TensorPoly p;
    for (int m = 0; m < kStressDofs; ++m) p.coeffs += inv(m, l) * span[m].coeffs;
    set.shapes[l] = p;
  }
  return set;
}

ReducedSystem reduced_matrix_12(const TetGeometry& g) {
  const NNTensorBasis nn = build_nn_tensors(g);
  ReducedSystem r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r.t[i][j] = nn.t[i].apply(g.grad[j]);
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) r.t_tilde[i][j] = r.t[i][j] - r.t[i][i];
  }

  // Row block k: divergence at x_k. Column block i: phi_i(x_j), j != i,
  // j ascending, after eliminating 2 phi_i(x_i) = -sum_{j != i} phi_i(x_j).
  r.matrix.setZero();
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 4; ++i) {
      int slot = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        Vec3 entry = Vec3::Zero();
        if (k == i) {
          entry = r.t_tilde[i][j];
        } else if (j == k) {
          entry = r.t[i][i];
        }
        r.matrix.block<3, 1>(3 * k, 3 * i + slot) = entry;
        ++slot;
      }
    }
  }
  r.determinant = r.matrix.determinant();
  return r;
}

SymTensor evaluate(const TetGeometry& g, const TensorPoly& tau, const Vec3& x) {
  return tau.at(g.barycentric(x));
}

Vec3 divergence(const TetGeometry& g, const TensorPoly& tau, const Vec3& x) {
  return evaluate_affine(tau.divergence(g.grad), g.barycentric(x));
}

}  // namespace nnelast
