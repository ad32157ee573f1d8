#include "nnelast/poly_field.hpp"

#include <cmath>

#include "nnelast/errors.hpp"

namespace nnelast {

namespace {

double power(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

double monomial(const std::array<int, 3>& p, const Vec3& x) {
  return power(x[0], p[0]) * power(x[1], p[1]) * power(x[2], p[2]);
}

// d/dx_a of the monomial.
double monomial_derivative(std::array<int, 3> p, int a, const Vec3& x) {
  if (p[a] == 0) return 0.0;
  const double k = p[a];
  --p[a];
  return k * monomial(p, x);
}

}  // namespace

SymTensor PolyTensorField::value(const Vec3& x) const {
  SymTensor s;
  for (const Term& t : terms) s += monomial(t.power, x) * t.coeff;
  return s;
}

Vec3 PolyTensorField::divergence(const Vec3& x) const {
  Vec3 d = Vec3::Zero();
  for (const Term& t : terms) {
    const Mat3 c = t.coeff.matrix();
    for (int a = 0; a < 3; ++a) {
      d += monomial_derivative(t.power, a, x) * c.col(a);
    }
  }
  return d;
}

TensorField PolyTensorField::field() const {
  return {[f = *this](const Vec3& x) { return f.value(x); },
          [f = *this](const Vec3& x) { return f.divergence(x); }};
}

PolyTensorField random_poly_field(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  PolyTensorField f;
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; a + b <= degree; ++b) {
      for (int c = 0; a + b + c <= degree; ++c) {
        PolyTensorField::Term t;
        t.power = {a, b, c};
        for (int k = 0; k < SymTensor::kSize; ++k) t.coeff[k] = coef(rng);
        f.terms.push_back(t);
      }
    }
  }
  return f;
}

Tet random_tet(std::mt19937_64& rng, double max_ratio) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  for (;;) {
    Tet t;
    for (auto& v : t.vertices) v = Vec3(coord(rng), coord(rng), coord(rng));
    try {
      const TetGeometry g = geometry(t);
      if (g.diameter / g.inradius <= max_ratio) return t;
    } catch (const DegenerateTet&) {
    }
  }
}

}  // namespace nnelast
