#include <gtest/gtest.h>

#include <random>

#include "nnelast/affine_map.hpp"
#include "nnelast/element.hpp"
#include "nnelast/poly_field.hpp"

using namespace nnelast;

namespace {

Tet scaled_reference(double s) {
  Tet t = Tet::reference();
  for (auto& v : t.vertices) v *= s;
  return t;
}

}  // namespace

TEST(AffineMap, IdentityAndScaling) {
  const AffineMap id = map_from_tets(Tet::reference(), Tet::reference());
  EXPECT_TRUE(id.a.isZero(1e-15));
  EXPECT_TRUE(id.b.isIdentity(1e-15));
  EXPECT_DOUBLE_EQ(id.jacobian, 1.0);

  const AffineMap two = map_from_tets(Tet::reference(), scaled_reference(2));
  EXPECT_TRUE(two.b.isApprox(2 * Mat3::Identity()));
  EXPECT_NEAR(two.jacobian, 8.0, 1e-14);
  const SymTensor t{1, 2, 3, 4, 5, 6};
  const SymTensor p = push_stress(two, t);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(p[k], t[k] / 16, 1e-15);
}

TEST(AffineMap, IdentityLeavesDualsUnchanged) {
  const AffineMap id = map_from_tets(Tet::reference(), Tet::reference());
  const SymTensor c{1, 2, 3, 4, 5, 6};
  const SymTensor pc = push_constant_dual(id, c);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(pc[k], c[k], 1e-15);
  EXPECT_TRUE(push_vector_dual(id, Vec3(1, 2, 3)).isApprox(Vec3(1, 2, 3)));
}

TEST(AffineMap, RoundTripOnRandomTet) {
  std::mt19937_64 rng(20);
  std::uniform_real_distribution<double> u(0, 1);
  const Tet phys = random_tet(rng);
  const AffineMap m = map_from_tets(Tet::reference(), phys);
  for (int i = 0; i < 4; ++i) {
    EXPECT_LT((m.apply(Tet::reference().vertices[i]) - phys.vertices[i]).norm(),
              1e-12);
  }
  for (int i = 0; i < 10; ++i) {
    const Vec3 x(u(rng), u(rng), u(rng));
    EXPECT_LT((m.inverse(m.apply(x)) - x).norm(), 1e-12);
  }
}

TEST(AffineMap, PushedReferenceShapesStayInSpace) {
  std::mt19937_64 rng(21);
  const TetGeometry gr = geometry(Tet::reference());
  const StressShapeSet ref = nodal_basis(gr);
  for (int t = 0; t < 3; ++t) {
    const Tet phys = random_tet(rng);
    const TetGeometry g = geometry(phys);
    const AffineMap m = map_from_tets(Tet::reference(), phys);
    const StressShapeSet direct = nodal_basis(g);
    // Re-expanding a pushed shape through the physical DOFs must reproduce it.
    for (const TensorPoly& shape : ref.shapes) {
      const TensorPoly pushed = push_stress(m, shape);
      const TensorPoly back = direct.combine(evaluate_dofs(g, pushed));
      EXPECT_LT((back.coeffs - pushed.coeffs).cwiseAbs().maxCoeff(),
                1e-9 * std::max(1.0, pushed.coeffs.cwiseAbs().maxCoeff()));
    }
  }
}

TEST(AffineMap, MomentInvarianceIncludingNegativeOrientation) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(-1, 1);
  const TetGeometry gr = geometry(Tet::reference());
  const SpanningSet span = spanning_basis(gr, build_nn_tensors(gr));
  for (int t = 0; t < 20; ++t) {
    Tet phys = random_tet(rng);
    if (t % 2) std::swap(phys.vertices[2], phys.vertices[3]);
    const TetGeometry g = geometry(phys);
    const AffineMap m = map_from_tets(Tet::reference(), phys);
    TensorPoly tau_hat;
    for (const auto& s : span) tau_hat += u(rng) * s;
    const TensorPoly tau = push_stress(m, tau_hat);

    const DofVector dh = evaluate_dofs(gr, tau_hat);
    const DofVector d = evaluate_dofs(g, tau);
    const double scale = dh.cwiseAbs().maxCoeff();
    EXPECT_LT((d - dh).head<kFaceDofs>().cwiseAbs().maxCoeff(), 1e-10 * scale);

    const SymTensor c_hat{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    EXPECT_NEAR(g.volume * frobenius(tau.mean(), push_constant_dual(m, c_hat)),
                gr.volume * frobenius(tau_hat.mean(), c_hat), 1e-10 * scale);

    // (div tau, v) with v constant
    const Vec3 v_hat(u(rng), u(rng), u(rng));
    const Vec3 v = push_vector_dual(m, v_hat);
    const Vec3 mean_div = tau.divergence(g.grad).colwise().mean().transpose();
    const Vec3 mean_div_hat = tau_hat.divergence(gr.grad).colwise().mean().transpose();
    EXPECT_NEAR(g.volume * mean_div.dot(v), gr.volume * mean_div_hat.dot(v_hat),
                1e-10 * scale);
  }
}
