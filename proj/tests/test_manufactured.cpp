#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "nnelast/manufactured.hpp"

using namespace nnelast;

namespace {

// -div sigma by fourth-order central differences of manufactured_sigma.
Vec3 fd_force(const Vec3& x, const Material& m, Variant v, double h) {
  Vec3 div = Vec3::Zero();
  for (int a = 0; a < 3; ++a) {
    Vec3 dx = Vec3::Zero();
    dx[a] = h;
    auto s = [&](double k) { return manufactured_sigma(x + k * dx, m, v).matrix(); };
    const Mat3 d = (-s(2) + 8 * s(1) - 8 * s(-1) + s(-2)) / (12 * h);
    div += d.col(a);
  }
  return -div;
}

Vec3 random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  return {u(rng), u(rng), u(rng)};
}

}  // namespace

TEST(Manufactured, Origin) {
  for (Variant v : {Variant::Paper, Variant::Symmetrized}) {
    EXPECT_TRUE(manufactured_u(Vec3::Zero(), v).isZero());
  }
  const Vec3 x(0, 0, std::numbers::pi / 6);
  EXPECT_NEAR(manufactured_u(x, Variant::Paper)[2], 0.0, 1e-15);
}

TEST(Manufactured, ClosedForm) {
  std::mt19937_64 rng(60);
  for (int i = 0; i < 10; ++i) {
    const Vec3 x = random_point(rng);
    const Vec3 u = manufactured_u(x, Variant::Paper);
    using std::cos;
    using std::sin;
    EXPECT_NEAR(u[0], sin(3 * x[0]) * cos(3 * x[1]) * cos(3 * x[2]), 1e-15);
    EXPECT_NEAR(u[1], cos(3 * x[0]) * sin(3 * x[1]) * cos(3 * x[2]), 1e-15);
    EXPECT_NEAR(u[2], cos(3 * x[0]) * cos(3 * x[2]) * sin(3 * x[2]), 1e-15);
    EXPECT_NEAR(manufactured_u(x, Variant::Symmetrized)[2],
                cos(3 * x[0]) * cos(3 * x[1]) * sin(3 * x[2]), 1e-15);
  }
}

TEST(Manufactured, SymmetrizedIsCyclic) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 20; ++i) {
    const Vec3 x = random_point(rng);
    const Vec3 shifted(x[1], x[2], x[0]);
    const Vec3 u = manufactured_u(x, Variant::Symmetrized);
    const Vec3 us = manufactured_u(shifted, Variant::Symmetrized);
    // u_i(x) = u_{i+1}(P x) with P the cyclic shift
    EXPECT_NEAR(u[0], us[2], 1e-14);
    EXPECT_NEAR(u[1], us[0], 1e-14);
    EXPECT_NEAR(u[2], us[1], 1e-14);
  }
}

TEST(Manufactured, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(62);
  for (Variant v : {Variant::Paper, Variant::Symmetrized}) {
    for (int i = 0; i < 20; ++i) {
      const Vec3 x = random_point(rng);
      const Mat3 g = manufactured_grad_u(x, v);
      for (int a = 0; a < 3; ++a) {
        Vec3 dx = Vec3::Zero();
        dx[a] = 1e-6;
        const Vec3 fd = (manufactured_u(x + dx, v) - manufactured_u(x - dx, v)) / 2e-6;
        EXPECT_LT((fd - g.col(a)).norm(), 1e-8);
      }
    }
  }
}

TEST(Manufactured, ForceMatchesFiniteDifferences) {
  std::mt19937_64 rng(63);
  for (double nu : {0.3, 0.45, 0.49, 0.4999}) {
    const Material m = Material::from_young_poisson(1.0, nu);
    for (Variant v : {Variant::Paper, Variant::Symmetrized}) {
      for (int i = 0; i < 50; ++i) {
        const Vec3 x = random_point(rng);
        const Vec3 f = manufactured_f(x, m, v);
        const Vec3 fd = fd_force(x, m, v, 1e-4);
        EXPECT_LT((f - fd).cwiseAbs().maxCoeff(), 1e-6);
      }
    }
  }
}

TEST(Manufactured, TraceAndDeviatorOfSymmetrizedStress) {
  const Material m = Material::from_young_poisson(1.0, 0.3);
  std::mt19937_64 rng(64);
  auto ccc = [](const Vec3& x) {
    return std::cos(3 * x[0]) * std::cos(3 * x[1]) * std::cos(3 * x[2]);
  };
  const Vec3 x0(0.1, 0.2, 0.3);
  const double c =
      trace(manufactured_sigma(x0, m, Variant::Symmetrized)) / ccc(x0);
  // tr(sigma) = (2 mu + 3 lambda) div u = 9 (2 mu + 3 lambda) cos cos cos
  EXPECT_NEAR(c, 9 * (2 * m.mu + 3 * m.lambda), 1e-12);
  for (int i = 0; i < 20; ++i) {
    const Vec3 x = random_point(rng);
    const SymTensor s = manufactured_sigma(x, m, Variant::Symmetrized);
    EXPECT_NEAR(trace(s), c * ccc(x), 1e-12);
    const SymTensor d = deviator(s);
    EXPECT_NEAR(d.xx(), 0.0, 1e-12);
    EXPECT_NEAR(d.yy(), 0.0, 1e-12);
    EXPECT_NEAR(d.zz(), 0.0, 1e-12);
    EXPECT_NEAR(d.xy(), -6 * m.mu * std::sin(3 * x[0]) * std::sin(3 * x[1]) *
                            std::cos(3 * x[2]),
                1e-12);
  }
}

TEST(Manufactured, VariantNames) {
  EXPECT_EQ(parse_variant("paper"), Variant::Paper);
  EXPECT_EQ(parse_variant("symmetrized"), Variant::Symmetrized);
  EXPECT_EQ(to_string(Variant::Symmetrized), "symmetrized");
  EXPECT_THROW(parse_variant("other"), std::invalid_argument);
}
