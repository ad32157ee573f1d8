#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "nnelast/interpolation.hpp"
#include "nnelast/manufactured.hpp"
#include "nnelast/poly_field.hpp"

using namespace nnelast;

TEST(ProjectP1, ReproducesAffineFields) {
  std::mt19937_64 rng(50);
  const TetGeometry g = geometry(random_tet(rng));
  Mat3 a;
  a << 1, 2, 3, -1, 0.5, 2, 0, 1, -3;
  const Vec3 b(0.3, -0.1, 2);
  const VectorField v = [&](const Vec3& x) { return Vec3(a * x + b); };
  const VertexVectors p = project_p1(g, v);
  for (int j = 0; j < 4; ++j) {
    EXPECT_LT((p.row(j).transpose() - v(g.vertices[j])).norm(), 1e-12);
  }
}

TEST(ProjectP1, GalerkinOrthogonality) {
  const TetGeometry g = geometry(Tet::reference());
  const Vec3 d(1, -2, 0.5);
  // v = lambda_1 lambda_2 d
  const VectorField v = [&](const Vec3& x) {
    const Barycentric l = g.barycentric(x);
    return Vec3(l[0] * l[1] * d);
  };
  const VertexVectors p = project_p1(g, v);
  // (v, lambda_k e_c) = |T| d_c int lambda_1 lambda_2 lambda_k / |T|
  for (int k = 0; k < 4; ++k) {
    std::array<int, 4> e{1, 1, 0, 0};
    ++e[k];
    const double vk = g.volume * exact_simplex_integral(e);
    for (int c = 0; c < 3; ++c) {
      double pk = 0;
      for (int j = 0; j < 4; ++j) {
        pk += p(j, c) * g.volume * (j == k ? 0.1 : 0.05);
      }
      EXPECT_NEAR(pk, vk * d[c], 1e-12);
    }
  }
}

TEST(ProjectP1, Idempotent) {
  std::mt19937_64 rng(51);
  const TetGeometry g = geometry(random_tet(rng));
  const VectorField v = [](const Vec3& x) {
    return Vec3(std::sin(x[0]), x[1] * x[2], std::exp(x[2]));
  };
  const VertexVectors p = project_p1(g, v);
  const VertexVectors pp =
      project_p1(g, [&](const Vec3& x) { return evaluate_affine(p, g.barycentric(x)); });
  EXPECT_LT((p - pp).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(InterpolateNN, ReproducesConstants) {
  const TetMesh mesh = generate_box(2);
  const GlobalDofMap map = build_dof_map(mesh);
  const SymTensor c{1, -2, 3, 0.4, 0.5, -0.6};
  const TensorField f{[c](const Vec3&) { return c; },
                      [](const Vec3&) { return Vec3(Vec3::Zero()); }};
  const DiscreteStressField d = interpolate_nn(f, mesh, map);
  for (int e = 0; e < mesh.num_tets(); ++e) {
    const StressShapeSet s = nodal_basis(geometry(mesh.tet(e)));
    const TensorPoly p = d.element(map, e, s);
    const TensorPoly expected = TensorPoly::from(c, homogenized_constant());
    EXPECT_LT((p.coeffs - expected.coeffs).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT(p.divergence(s.geom.grad).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(InterpolateNN, ProjectionOnDiscreteFields) {
  // A random conforming discrete field is reproduced by I_nn.
  const TetMesh mesh = generate_box(2);
  const GlobalDofMap map = build_dof_map(mesh);
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(-1, 1);
  DiscreteStressField field;
  field.coeffs.resize(map.num_stress);
  for (int i = 0; i < map.num_stress; ++i) field.coeffs[i] = u(rng);

  std::vector<StressShapeSet> shapes;
  for (int e = 0; e < mesh.num_tets(); ++e) {
    shapes.push_back(nodal_basis(geometry(mesh.tet(e))));
  }
  auto locate = [&](const Vec3& x) {
    // the owning tet with all barycentrics >= -eps
    for (int e = 0; e < mesh.num_tets(); ++e) {
      const Barycentric l = shapes[e].geom.barycentric(x);
      if (*std::min_element(l.begin(), l.end()) > -1e-12) return e;
    }
    return -1;
  };
  // Evaluate element-wise. Face moments must see the normal-normal trace,
  // which is single-valued, so any owner will do.
  const TensorField f{
      [&](const Vec3& x) {
        const int e = locate(x);
        return field.element(map, e, shapes[e]).at(shapes[e].geom.barycentric(x));
      },
      [&](const Vec3& x) {
        const int e = locate(x);
        return evaluate_affine(
            field.element(map, e, shapes[e]).divergence(shapes[e].geom.grad),
            shapes[e].geom.barycentric(x));
      }};
  // Interior quadrature points lie strictly inside one tet, so volume and
  // divergence moments are unambiguous.
  const DiscreteStressField back = interpolate_nn(f, mesh, map);
  EXPECT_LT((back.coeffs - field.coeffs).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Commuting, RandomPolynomials) {
  const TetMesh mesh = generate_box(2);
  const GlobalDofMap map = build_dof_map(mesh);
  std::mt19937_64 rng(53);
  for (int t = 0; t < 5; ++t) {
    const PolyTensorField p = random_poly_field(rng, 4);
    EXPECT_LT(check_commuting(p.field(), mesh, map), 1e-9);
  }
}

TEST(Commuting, ManufacturedStress) {
  const TetMesh mesh = generate_box(2);
  const GlobalDofMap map = build_dof_map(mesh);
  const Material m = Material::from_young_poisson(1.0, 0.3);
  const ExactSolution ex = manufactured_solution(m, Variant::Paper);
  // The projected divergence uses the same 14-point rule as the moments, so
  // the identity holds up to roundoff.
  EXPECT_LT(check_commuting({ex.sigma, ex.div_sigma}, mesh, map), 1e-9);
}

TEST(InterpolateNN, ManufacturedStressConvergesLinearly) {
  const Material m = Material::from_young_poisson(1.0, 0.3);
  const ExactSolution ex = manufactured_solution(m, Variant::Paper);
  std::vector<double> err, h;
  for (int n : {2, 4, 8}) {
    const TetMesh mesh = generate_box(n);
    const GlobalDofMap map = build_dof_map(mesh);
    const DiscreteStressField d = interpolate_nn({ex.sigma, ex.div_sigma}, mesh, map);
    const QuadratureRule& q = quad_rule(QuadKind::Deg5Point14);
    double s = 0;
    for (int e = 0; e < mesh.num_tets(); ++e) {
      const StressShapeSet shapes = nodal_basis(geometry(mesh.tet(e)));
      const TensorPoly p = d.element(map, e, shapes);
      for (size_t k = 0; k < q.points.size(); ++k) {
        const Vec3 x = shapes.geom.point(q.points[k]);
        s += q.weights[k] * shapes.geom.volume *
             std::pow(frobenius_norm(ex.sigma(x) - p.at(q.points[k])), 2);
      }
    }
    err.push_back(std::sqrt(s));
    h.push_back(mesh.h_max);
  }
  const double rate = std::log(err[1] / err[2]) / std::log(h[1] / h[2]);
  EXPECT_GT(rate, 0.8);
  EXPECT_LT(rate, 2.2);
}
