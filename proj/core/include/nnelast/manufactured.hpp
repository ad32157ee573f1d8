#pragma once

#include <functional>
#include <string>

#include "nnelast/symtensor.hpp"

namespace nnelast {

/// Which third displacement component to use. `Paper` is
/// cos(3x1) cos(3x3) sin(3x3); `Symmetrized` is cos(3x1) cos(3x2) sin(3x3).
enum class Variant { Paper, Symmetrized };

Variant parse_variant(const std::string& name);
std::string to_string(Variant v);

/// Exact solution of the elasticity problem with f = -div sigma.
struct ExactSolution {
  std::function<Vec3(const Vec3&)> u;
  std::function<Mat3(const Vec3&)> grad_u;  ///< (i, j) = d u_i / d x_j
  std::function<SymTensor(const Vec3&)> sigma;
  std::function<Vec3(const Vec3&)> div_sigma;
};

Vec3 manufactured_u(const Vec3& x, Variant variant);
Mat3 manufactured_grad_u(const Vec3& x, Variant variant);
SymTensor manufactured_sigma(const Vec3& x, const Material& m, Variant variant);
Vec3 manufactured_f(const Vec3& x, const Material& m, Variant variant);

ExactSolution manufactured_solution(const Material& m, Variant variant);

/// u = a + G x: constant stress, zero body force.
ExactSolution affine_solution(const Vec3& a, const Mat3& g, const Material& m);

}  // namespace nnelast
