#pragma once

#include <array>
#include <vector>

#include "nnelast/barycentric.hpp"

namespace nnelast {

enum class QuadKind {
  Deg2Point4,   ///< 4-point Gauss rule, exact for quadratics
  Deg5Point14,  ///< 14-point rule, exact for quintics
};

/// Volume rule in barycentric coordinates; weights sum to one and are
/// multiplied by |T| at the point of use.
struct QuadratureRule {
  std::vector<Barycentric> points;
  std::vector<double> weights;
  int degree = 0;
};

/// Triangle rule in face barycentric coordinates; weights sum to one.
struct FaceQuadratureRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  int degree = 0;
};

const QuadratureRule& quad_rule(QuadKind kind);

/// 7-point Radon rule, degree 5.
const FaceQuadratureRule& face_rule_deg5();

}  // namespace nnelast
