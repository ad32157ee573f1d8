#include "nnelast/quadrature.hpp"

#include <cmath>

namespace nnelast {

namespace {

void add_orbit_aaab(QuadratureRule& r, double a, double w) {
  const double b = 1.0 - 3.0 * a;
  r.points.push_back({b, a, a, a});
  r.points.push_back({a, b, a, a});
  r.points.push_back({a, a, b, a});
  r.points.push_back({a, a, a, b});
  for (int k = 0; k < 4; ++k) r.weights.push_back(w);
}

void add_orbit_aabb(QuadratureRule& r, double a, double w) {
  const double b = 0.5 - a;
  r.points.push_back({a, a, b, b});
  r.points.push_back({a, b, a, b});
  r.points.push_back({a, b, b, a});
  r.points.push_back({b, a, a, b});
  r.points.push_back({b, a, b, a});
  r.points.push_back({b, b, a, a});
  for (int k = 0; k < 6; ++k) r.weights.push_back(w);
}

QuadratureRule make_deg2() {
  QuadratureRule r;
  r.degree = 2;
  add_orbit_aaab(r, (5.0 - std::sqrt(5.0)) / 20.0, 0.25);
  return r;
}

QuadratureRule make_deg5() {
  // Weights below are for the unit reference volume 1/6.
  QuadratureRule r;
  r.degree = 5;
  add_orbit_aaab(r, 0.0927352503108912264023239137370306052,
                 6.0 * 0.0122488405193936582572850342477212107);
  add_orbit_aaab(r, 0.3108859192633006097973457337634578147,
                 6.0 * 0.0187813209530026417998642753888810245);
  add_orbit_aabb(r, 0.0455037041256496494918805262793394051,
                 6.0 * 0.0070910034628469110730115713533762410);
  return r;
}

FaceQuadratureRule make_face_deg5() {
  FaceQuadratureRule r;
  r.degree = 5;
  const double s15 = std::sqrt(15.0);
  r.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  r.weights.push_back(9.0 / 40.0);
  for (const double sign : {-1.0, 1.0}) {
    const double a = (6.0 + sign * s15) / 21.0;
    const double w = (155.0 + sign * s15) / 1200.0;
    const double b = 1.0 - 2.0 * a;
    r.points.push_back({b, a, a});
    r.points.push_back({a, b, a});
    r.points.push_back({a, a, b});
    for (int k = 0; k < 3; ++k) r.weights.push_back(w);
  }
  return r;
}

}  // namespace

const QuadratureRule& quad_rule(QuadKind kind) {
  static const QuadratureRule deg2 = make_deg2();
  static const QuadratureRule deg5 = make_deg5();
  return kind == QuadKind::Deg2Point4 ? deg2 : deg5;
}

const FaceQuadratureRule& face_rule_deg5() {
  static const FaceQuadratureRule rule = make_face_deg5();
  return rule;
}

}  // namespace nnelast
