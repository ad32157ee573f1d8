#include "nnelast/barycentric.hpp"

#include <cassert>

namespace nnelast {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

double exact_simplex_integral(const std::array<int, 4>& e) {
  assert(e[0] >= 0 && e[1] >= 0 && e[2] >= 0 && e[3] >= 0);
  const int total = e[0] + e[1] + e[2] + e[3];
  return factorial(e[0]) * factorial(e[1]) * factorial(e[2]) *
         factorial(e[3]) * 6.0 / factorial(total + 3);
}

double exact_face_integral(const std::array<int, 3>& e) {
  const int total = e[0] + e[1] + e[2];
  return factorial(e[0]) * factorial(e[1]) * factorial(e[2]) * 2.0 /
         factorial(total + 2);
}

const Eigen::Matrix<double, kNumMonomials, kNumMonomials>& monomial_mass() {
  static const auto mass = [] {
    Eigen::Matrix<double, kNumMonomials, kNumMonomials> m;
    for (int a = 0; a < kNumMonomials; ++a) {
      for (int b = 0; b < kNumMonomials; ++b) {
        std::array<int, 4> e{0, 0, 0, 0};
        ++e[kMonomials[a].i];
        ++e[kMonomials[a].j];
        ++e[kMonomials[b].i];
        ++e[kMonomials[b].j];
        m(a, b) = exact_simplex_integral(e);
      }
    }
    return m;
  }();
  return mass;
}

const ScalarQuadratic& monomial_means() {
  static const auto means = [] {
    ScalarQuadratic v;
    for (int a = 0; a < kNumMonomials; ++a) {
      std::array<int, 4> e{0, 0, 0, 0};
      ++e[kMonomials[a].i];
      ++e[kMonomials[a].j];
      v[a] = exact_simplex_integral(e);
    }
    return v;
  }();
  return means;
}

ScalarQuadratic monomial_values(const Barycentric& l) {
  ScalarQuadratic v;
  for (int m = 0; m < kNumMonomials; ++m) {
    v[m] = l[kMonomials[m].i] * l[kMonomials[m].j];
  }
  return v;
}

ScalarQuadratic homogenized_linear(int k) {
  ScalarQuadratic p = ScalarQuadratic::Zero();
  for (int l = 0; l < 4; ++l) p[monomial_index(k, l)] += 1.0;
  return p;
}

ScalarQuadratic homogenized_constant() {
  ScalarQuadratic p;
  for (int m = 0; m < kNumMonomials; ++m) {
    p[m] = kMonomials[m].i == kMonomials[m].j ? 1.0 : 2.0;
  }
  return p;
}

ScalarQuadratic product_monomial(int i, int j) {
  ScalarQuadratic p = ScalarQuadratic::Zero();
  p[monomial_index(i, j)] = 1.0;
  return p;
}

TensorPoly TensorPoly::from(const SymTensor& t, const ScalarQuadratic& p) {
  TensorPoly out;
  for (int c = 0; c < 6; ++c) out.coeffs.col(c) = t[c] * p;
  return out;
}

SymTensor TensorPoly::at(const Barycentric& lambda) const {
  const Eigen::Matrix<double, 1, 6> row =
      monomial_values(lambda).transpose() * coeffs;
  return {row[0], row[1], row[2], row[3], row[4], row[5]};
}

SymTensor TensorPoly::coefficient(int m) const {
  return {coeffs(m, 0), coeffs(m, 1), coeffs(m, 2),
          coeffs(m, 3), coeffs(m, 4), coeffs(m, 5)};
}

VertexVectors TensorPoly::divergence(const std::array<Vec3, 4>& grads) const {
  // grad(lambda_i lambda_j) = lambda_i grad_j + lambda_j grad_i
  VertexVectors v = VertexVectors::Zero();
  for (int m = 0; m < kNumMonomials; ++m) {
    const SymTensor c = coefficient(m);
    const int i = kMonomials[m].i;
    const int j = kMonomials[m].j;
    v.row(i) += c.apply(grads[j]).transpose();
    v.row(j) += c.apply(grads[i]).transpose();
  }
  return v;
}

SymTensor TensorPoly::mean() const {
  const Eigen::Matrix<double, 1, 6> row = monomial_means().transpose() * coeffs;
  return {row[0], row[1], row[2], row[3], row[4], row[5]};
}

Vec3 evaluate_affine(const VertexVectors& v, const Barycentric& l) {
  return (l[0] * v.row(0) + l[1] * v.row(1) + l[2] * v.row(2) +
          l[3] * v.row(3))
      .transpose();
}

}  // namespace nnelast
