#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <tuple>

#include "nnelast/assembly.hpp"
#include "nnelast/errors.hpp"
#include "nnelast/quadrature.hpp"
#include "nnelast/solve.hpp"
#include "nnelast/study.hpp"

using namespace nnelast;

namespace {

const Material kSteel = Material::from_young_poisson(1.0, 0.3);

}  // namespace

TEST(Integrals, ExactFormulaExamples) {
  EXPECT_DOUBLE_EQ(exact_simplex_integral({1, 1, 0, 0}), 1.0 / 20);
  EXPECT_DOUBLE_EQ(exact_simplex_integral({0, 0, 0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(exact_simplex_integral({2, 0, 0, 0}) /
                       exact_simplex_integral({1, 1, 0, 0}),
                   2.0);
  const QuadratureRule& q4 = quad_rule(QuadKind::Deg2Point4);
  double s = 0;
  for (size_t p = 0; p < q4.points.size(); ++p) {
    s += q4.weights[p] * q4.points[p][0] * q4.points[p][1];
    EXPECT_GT(q4.weights[p], 0);
  }
  EXPECT_NEAR(s, 1.0 / 20, 1e-13);
  const QuadratureRule& q14 = quad_rule(QuadKind::Deg5Point14);
  s = 0;
  for (size_t p = 0; p < q14.points.size(); ++p) {
    const auto& l = q14.points[p];
    s += q14.weights[p] * l[0] * l[0] * l[1] * l[1] * l[2];
    EXPECT_GT(q14.weights[p], 0);
  }
  EXPECT_NEAR(s, exact_simplex_integral({2, 2, 1, 0}), 1e-12 * s);
}

TEST(ElementMatrices, ExactMatchesQuadrature) {
  std::mt19937_64 rng(40);
  std::uniform_real_distribution<double> u(0, 1);
  Tet t{{Vec3(0, 0, 0), Vec3(1, 0.1, 0), Vec3(0.2, 0.9, 0.1), Vec3(0.1, 0.2, 0.8)}};
  const StressShapeSet shapes = nodal_basis(geometry(t));
  const TetGeometry& g = shapes.geom;
  const ElementMatrices em = element_matrices(shapes, kSteel, nullptr);
  EXPECT_TRUE(em.f.isZero());
  EXPECT_LT((em.a - em.a.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_GT(Eigen::SelfAdjointEigenSolver<decltype(em.a)>(em.a).eigenvalues().minCoeff(), 0);

  const QuadratureRule& q = quad_rule(QuadKind::Deg5Point14);
  Eigen::Matrix<double, kStressDofs, kStressDofs> a =
      Eigen::Matrix<double, kStressDofs, kStressDofs>::Zero();
  Eigen::Matrix<double, kStressDofs, kDisplacementDofs> b =
      Eigen::Matrix<double, kStressDofs, kDisplacementDofs>::Zero();
  for (size_t p = 0; p < q.points.size(); ++p) {
    const Barycentric& l = q.points[p];
    const double w = q.weights[p] * g.volume;
    for (int k = 0; k < kStressDofs; ++k) {
      const SymTensor sk = shapes.shapes[k].at(l);
      const Vec3 dk = evaluate_affine(shapes.shapes[k].divergence(g.grad), l);
      for (int m = 0; m < kStressDofs; ++m) {
        a(k, m) += w * frobenius(compliance_apply(sk, kSteel),
                                 shapes.shapes[m].at(l));
      }
      for (int j = 0; j < 4; ++j) {
        for (int d = 0; d < 3; ++d) b(k, 3 * j + d) += w * l[j] * dk[d];
      }
    }
  }
  EXPECT_LT((a - em.a).cwiseAbs().maxCoeff(), 1e-12 * em.a.cwiseAbs().maxCoeff());
  EXPECT_LT((b - em.b).cwiseAbs().maxCoeff(), 1e-12 * em.b.cwiseAbs().maxCoeff());
}

TEST(ElementMatrices, ConstantFieldCoupling) {
  const StressShapeSet shapes = nodal_basis(geometry(Tet::reference()));
  const TetGeometry& g = shapes.geom;
  const ElementMatrices em = element_matrices(shapes, kSteel, nullptr);
  // phi = constant tensor, w = A x: coupling = -|T| A : phi
  const SymTensor phi{1, 2, 3, 0.5, -0.5, 0.25};
  const DofVector c = evaluate_dofs(g, TensorPoly::from(phi, homogenized_constant()));
  Mat3 a;
  a << 1, 0.2, 0.3, 0.2, -1, 0.1, 0.3, 0.1, 2;
  Eigen::Matrix<double, kLiftDofs, 1> w;
  for (int j = 0; j < 4; ++j) w.segment<3>(3 * j) = a * g.vertices[j];
  const double coupling = c.dot(em.c * w);
  EXPECT_NEAR(coupling, -g.volume * frobenius(SymTensor::from_matrix(a), phi), 1e-13);
}

TEST(Assembly, SymmetricWithExpectedSize) {
  const TetMesh mesh = generate_box(1);
  const GlobalDofMap map = build_dof_map(mesh);
  const SaddleSystem sys = assemble(mesh, map, kSteel, nullptr);
  EXPECT_EQ(sys.size(), 234);
  const Eigen::SparseMatrix<double> k = sys.matrix();
  EXPECT_EQ(k.rows(), 234);
  const Eigen::MatrixXd dense(k);
  EXPECT_LT((dense - dense.transpose()).cwiseAbs().maxCoeff(), 1e-12);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::VectorXd x(sys.size());
  for (int i = 0; i < x.size(); ++i) x[i] = u(rng);
  EXPECT_LT((k * x - sys.apply(x)).norm(), 1e-12 * (k * x).norm());
}

TEST(Solve, ZeroDataGivesZero) {
  const TetMesh mesh = generate_box(2);
  const GlobalDofMap map = build_dof_map(mesh);
  const SaddleSystem sys = assemble(mesh, map, kSteel, nullptr);
  EXPECT_EQ(sys.rhs.norm(), 0.0);
  const SolveResult r = solve(sys);
  EXPECT_EQ(r.x.norm(), 0.0);
}

TEST(Solve, CondensedMatchesDirectOnFullSystem) {
  const TetMesh mesh = generate_box(2);
  const Material mat = Material::from_young_poisson(1.0, 0.45);
  const ExactSolution ex = manufactured_solution(mat, Variant::Paper);
  const DiscreteProblem p = build_problem(mesh, mat, ex);
  const SolveResult condensed = solve(p.system, 1e-10);
  const SolveResult direct = solve_sparse(p.system.matrix(), p.system.rhs, 1e-10);
  EXPECT_LE(condensed.report.relative_residual, 1e-10);
  EXPECT_LT(condensed.report.reduced_size, p.system.size());
  EXPECT_LT((condensed.x - direct.x).norm(), 1e-8 * direct.x.norm());
}

TEST(Solve, ToyBorderedSystemAgainstDense) {
  // [[S, B], [B^T, 0]] with S SPD 7x7 and B 7x3 of full rank
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1, 1);
  Eigen::MatrixXd m(7, 7), b(7, 3);
  for (int i = 0; i < m.size(); ++i) m.data()[i] = u(rng);
  for (int i = 0; i < b.size(); ++i) b.data()[i] = u(rng);
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(10, 10);
  k.topLeftCorner(7, 7) = m * m.transpose() + 7 * Eigen::MatrixXd::Identity(7, 7);
  k.topRightCorner(7, 3) = b;
  k.bottomLeftCorner(3, 7) = b.transpose();
  Eigen::VectorXd rhs(10);
  for (int i = 0; i < 10; ++i) rhs[i] = u(rng);

  const Eigen::VectorXd oracle = k.fullPivLu().solve(rhs);
  const SolveResult r = solve_sparse(k.sparseView(), rhs);
  EXPECT_LT((r.x - oracle).norm(), 1e-10);
  EXPECT_LE(r.report.relative_residual, 1e-9);
}

TEST(Solve, SingularSystemIsReported) {
  Eigen::SparseMatrix<double> k(3, 3);
  k.insert(0, 0) = 1.0;
  k.insert(1, 1) = 1.0;
  const Eigen::VectorXd rhs = Eigen::VectorXd::Ones(3);
  EXPECT_THROW(solve_sparse(k, rhs), SolverBreakdown);
}

class PatchTest : public ::testing::TestWithParam<double> {};

TEST_P(PatchTest, AffineDisplacementIsExact) {
  const TetMesh mesh = generate_box(2);
  const Material mat = Material::from_young_poisson(1.0, GetParam());
  Mat3 g;
  g << 0.3, -0.2, 0.5, 0.1, 0.7, -0.4, 0.6, 0.2, -0.1;
  const ExactSolution ex = affine_solution(Vec3(0.1, -0.3, 0.2), g, mat);
  const DiscreteProblem p = build_problem(mesh, mat, ex);
  const DiscreteSolution s = solve_problem(p, 1e-10);
  EXPECT_LT(s.report.relative_residual, 1e-10);
  const ErrorNorms e = compute_errors(mesh, p.map, s, ex);
  const double n = exact_norm(mesh, ex);
  EXPECT_LT(e.u / n, 1e-8);
  EXPECT_LT(e.strain / n, 1e-8);
  EXPECT_LT(e.sigma / n, 1e-8);
  EXPECT_LT(e.divsigma / n, 1e-8);
}

INSTANTIATE_TEST_SUITE_P(Nu, PatchTest, ::testing::Values(0.3, 0.4999));

TEST(Export, CoordinateFormat) {
  Eigen::SparseMatrix<double> k(2, 2);
  k.insert(0, 1) = 0.1;
  k.insert(1, 0) = -2.0;
  const auto path = std::filesystem::temp_directory_path() / "nnelast_k.txt";
  export_coordinate(k, path);
  std::ifstream in(path);
  std::vector<std::tuple<int, int, double>> rows;
  int r, c;
  double v;
  while (in >> r >> c >> v) rows.emplace_back(r, c, v);
  std::filesystem::remove(path);
  ASSERT_EQ(rows.size(), 2u);
  std::sort(rows.begin(), rows.end());
  EXPECT_EQ(rows[0], std::make_tuple(0, 1, 0.1));
  EXPECT_EQ(rows[1], std::make_tuple(1, 0, -2.0));
}
