#pragma once

#include <array>

#include <Eigen/Dense>

#include "nnelast/symtensor.hpp"

namespace nnelast {

/// Quadratic polynomials on a tetrahedron are stored over the ten homogeneous
/// barycentric monomials lambda_i lambda_j (i <= j), in the order
/// 00 01 02 03 11 12 13 22 23 33.
inline constexpr int kNumMonomials = 10;

struct MonomialIndex {
  int i;
  int j;
};

inline constexpr std::array<MonomialIndex, kNumMonomials> kMonomials = {{
    {0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1},
    {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3},
}};

constexpr int monomial_index(int i, int j) {
  if (i > j) {
    const int t = i;
    i = j;
    j = t;
  }
  for (int m = 0; m < kNumMonomials; ++m) {
    if (kMonomials[m].i == i && kMonomials[m].j == j) return m;
  }
  return -1;
}

using Barycentric = std::array<double, 4>;
using ScalarQuadratic = Eigen::Matrix<double, kNumMonomials, 1>;
/// Monomial coefficients (rows) of each tensor component (columns).
using TensorCoeffs = Eigen::Matrix<double, kNumMonomials, 6>;
/// Affine vector field given by its values at the four vertices.
using VertexVectors = Eigen::Matrix<double, 4, 3>;

/// int_T lambda_1^a lambda_2^b lambda_3^c lambda_4^d  divided by |T|:
/// a! b! c! d! 3! / (a+b+c+d+3)!.
double exact_simplex_integral(const std::array<int, 4>& exponents);

/// int_F mu_1^a mu_2^b mu_3^c divided by |F| for the face barycentrics mu.
double exact_face_integral(const std::array<int, 3>& exponents);

/// M(m, n) = int_T M_m M_n / |T|.
const Eigen::Matrix<double, kNumMonomials, kNumMonomials>& monomial_mass();

/// int_T M_m / |T|.
const ScalarQuadratic& monomial_means();

ScalarQuadratic monomial_values(const Barycentric& lambda);

/// lambda_k written as a homogeneous quadratic (lambda_k * sum_l lambda_l).
ScalarQuadratic homogenized_linear(int k);
/// The constant 1 = (sum_l lambda_l)^2.
ScalarQuadratic homogenized_constant();
ScalarQuadratic product_monomial(int i, int j);

/// Symmetric-tensor-valued quadratic polynomial on a fixed tetrahedron.
struct TensorPoly {
  TensorCoeffs coeffs = TensorCoeffs::Zero();

  static TensorPoly from(const SymTensor& t, const ScalarQuadratic& p);

  SymTensor at(const Barycentric& lambda) const;
  /// Coefficients of monomial m as a tensor.
  SymTensor coefficient(int m) const;
  /// Row-wise divergence; affine, returned by vertex values. `grads` holds
  /// the barycentric gradients of the element.
  VertexVectors divergence(const std::array<Vec3, 4>& grads) const;
  /// int_T tau / |T|.
  SymTensor mean() const;

  TensorPoly& operator+=(const TensorPoly& o) {
    coeffs += o.coeffs;
    return *this;
  }
  friend TensorPoly operator*(double s, TensorPoly p) {
    p.coeffs *= s;
    return p;
  }
};

/// Evaluate an affine field from vertex values.
Vec3 evaluate_affine(const VertexVectors& v, const Barycentric& lambda);

}  // namespace nnelast
