#include "nnelast/assembly.hpp"

#include <cstdio>
#include <fstream>

#include "nnelast/errors.hpp"
#include "nnelast/quadrature.hpp"

namespace nnelast {

namespace {

constexpr int kCoeffs = kNumMonomials * 6;
using CoeffStack = Eigen::Matrix<double, kCoeffs, kStressDofs>;

// Row m * 6 + c holds coefficient (m, c) of every shape.
CoeffStack stack_coefficients(const StressShapeSet& s) {
  CoeffStack out;
  for (int k = 0; k < kStressDofs; ++k) {
    const auto& co = s.shapes[k].coeffs;
    for (int m = 0; m < kNumMonomials; ++m) {
      for (int c = 0; c < 6; ++c) out(m * 6 + c, k) = co(m, c);
    }
  }
  return out;
}

Eigen::Matrix<double, kCoeffs, kCoeffs> compliance_mass(const Material& m) {
  const auto& mass = monomial_mass();
  const auto w = compliance_form(m);
  Eigen::Matrix<double, kCoeffs, kCoeffs> k;
  for (int a = 0; a < kNumMonomials; ++a) {
    for (int b = 0; b < kNumMonomials; ++b) {
      k.block<6, 6>(a * 6, b * 6) = mass(a, b) * w;
    }
  }
  return k;
}

}  // namespace

ElementMatrices element_matrices(const StressShapeSet& shapes,
                                 const Material& material,
                                 const VectorField& load) {
  const TetGeometry& g = shapes.geom;
  ElementMatrices em;

  const CoeffStack s = stack_coefficients(shapes);
  em.a = g.volume * (s.transpose() * compliance_mass(material) * s);
  em.a = 0.5 * (em.a + em.a.transpose()).eval();

  for (int k = 0; k < kStressDofs; ++k) {
    const TensorPoly& phi = shapes.shapes[k];
    const VertexVectors div = phi.divergence(g.grad);
    const Mat3 mean = phi.mean().matrix();
    const Eigen::RowVector3d div_sum = div.colwise().sum();
    for (int j = 0; j < 4; ++j) {
      const Eigen::RowVector3d div_moment =
          (div_sum + div.row(j)) * (g.volume / 20.0);
      // eps(lambda_j e_d) : phi = grad_j . phi e_d
      const Eigen::RowVector3d strain_moment =
          g.volume * (g.grad[j].transpose() * mean);
      for (int d = 0; d < 3; ++d) {
        em.b(k, 3 * j + d) = div_moment[d];
        em.c(k, 3 * j + d) = -(strain_moment[d] + div_moment[d]);
      }
    }
  }

  em.f.setZero();
  if (load) {
    const QuadratureRule& q = quad_rule(QuadKind::Deg2Point4);
    for (size_t p = 0; p < q.points.size(); ++p) {
      const Barycentric& l = q.points[p];
      const Vec3 fx = load(g.point(l));
      for (int j = 0; j < 4; ++j) {
        em.f.segment<3>(3 * j) += (q.weights[p] * g.volume * l[j]) * fx;
      }
    }
  }
  return em;
}

SaddleSystem assemble(const TetMesh& mesh, const GlobalDofMap& map,
                      const Material& material, const VectorField& load,
                      const TraceField& dirichlet) {
  SaddleSystem sys;
  sys.map = map;
  sys.elements.resize(mesh.tets.size());
  sys.rhs = Eigen::VectorXd::Zero(map.total);
  sys.dirichlet_values.assign(mesh.vertices.size(), Vec3::Zero());
  for (int v = 0; v < mesh.num_vertices(); ++v) {
    if (map.dirichlet[v]) sys.dirichlet_values[v] = dirichlet.values[v];
  }

  for (int e = 0; e < mesh.num_tets(); ++e) {
    const StressShapeSet shapes = nodal_basis(geometry(mesh.tet(e)));
    ElementMatrices& em = sys.elements[e];
    em = element_matrices(shapes, material, load);

    const auto& sg = map.stress_gather[e];
    const auto& ug = map.displacement_gather[e];
    const auto& tg = map.trace_gather[e];
    for (int j = 0; j < kDisplacementDofs; ++j) sys.rhs[ug[j]] -= em.f[j];
    for (int j = 0; j < kLiftDofs; ++j) {
      if (tg[j] >= 0) continue;
      const double g = sys.dirichlet_values[mesh.tets[e][j / 3]][j % 3];
      if (g == 0.0) continue;
      for (int k = 0; k < kStressDofs; ++k) sys.rhs[sg[k]] -= em.c(k, j) * g;
    }
  }
  return sys;
}

SaddleSystem assemble(const TetMesh& mesh, const GlobalDofMap& map,
                      const Material& material, const VectorField& load) {
  TraceField zero;
  zero.values.assign(mesh.vertices.size(), Vec3::Zero());
  zero.fixed = map.dirichlet;
  return assemble(mesh, map, material, load, zero);
}

Eigen::SparseMatrix<double> SaddleSystem::matrix() const {
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(elements.size() * (kStressDofs * kStressDofs +
                                  4 * kStressDofs * kDisplacementDofs));
  for (size_t e = 0; e < elements.size(); ++e) {
    const ElementMatrices& em = elements[e];
    const auto& sg = map.stress_gather[e];
    const auto& ug = map.displacement_gather[e];
    const auto& tg = map.trace_gather[e];
    for (int k = 0; k < kStressDofs; ++k) {
      for (int l = 0; l < kStressDofs; ++l) {
        trip.emplace_back(sg[k], sg[l], em.a(k, l));
      }
      for (int j = 0; j < kDisplacementDofs; ++j) {
        if (em.b(k, j) == 0.0) continue;
        trip.emplace_back(sg[k], ug[j], em.b(k, j));
        trip.emplace_back(ug[j], sg[k], em.b(k, j));
      }
      for (int j = 0; j < kLiftDofs; ++j) {
        if (tg[j] < 0 || em.c(k, j) == 0.0) continue;
        trip.emplace_back(sg[k], tg[j], em.c(k, j));
        trip.emplace_back(tg[j], sg[k], em.c(k, j));
      }
    }
  }
  Eigen::SparseMatrix<double> k(map.total, map.total);
  k.setFromTriplets(trip.begin(), trip.end());
  return k;
}

Eigen::VectorXd SaddleSystem::apply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y = Eigen::VectorXd::Zero(map.total);
  for (size_t e = 0; e < elements.size(); ++e) {
    const ElementMatrices& em = elements[e];
    const auto& sg = map.stress_gather[e];
    const auto& ug = map.displacement_gather[e];
    const auto& tg = map.trace_gather[e];
    Eigen::Matrix<double, kStressDofs, 1> xs;
    Eigen::Matrix<double, kDisplacementDofs, 1> xu;
    Eigen::Matrix<double, kLiftDofs, 1> xt;
    for (int k = 0; k < kStressDofs; ++k) xs[k] = x[sg[k]];
    for (int j = 0; j < kDisplacementDofs; ++j) xu[j] = x[ug[j]];
    for (int j = 0; j < kLiftDofs; ++j) xt[j] = tg[j] < 0 ? 0.0 : x[tg[j]];

    const Eigen::Matrix<double, kStressDofs, 1> ys =
        em.a * xs + em.b * xu + em.c * xt;
    const Eigen::Matrix<double, kDisplacementDofs, 1> yu =
        em.b.transpose() * xs;
    const Eigen::Matrix<double, kLiftDofs, 1> yt = em.c.transpose() * xs;
    for (int k = 0; k < kStressDofs; ++k) y[sg[k]] += ys[k];
    for (int j = 0; j < kDisplacementDofs; ++j) y[ug[j]] += yu[j];
    for (int j = 0; j < kLiftDofs; ++j) {
      if (tg[j] >= 0) y[tg[j]] += yt[j];
    }
  }
  return y;
}

void export_coordinate(const Eigen::SparseMatrix<double>& k,
                       const std::filesystem::path& path) {
  std::FILE* out = std::fopen(path.c_str(), "w");
  if (out == nullptr) throw IoError("cannot write " + path.string());
  for (int col = 0; col < k.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(k, col); it; ++it) {
      std::fprintf(out, "%lld %lld %.17g\n", static_cast<long long>(it.row()),
                   static_cast<long long>(it.col()), it.value());
    }
  }
  if (std::fclose(out) != 0) throw IoError("write failed for " + path.string());
}

void export_vector(const Eigen::VectorXd& v, const std::filesystem::path& path) {
  std::FILE* out = std::fopen(path.c_str(), "w");
  if (out == nullptr) throw IoError("cannot write " + path.string());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::fprintf(out, "%.17g\n", v[i]);
  }
  if (std::fclose(out) != 0) throw IoError("write failed for " + path.string());
}

}  // namespace nnelast
