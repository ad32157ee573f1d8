#include "nnelast/manufactured.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace nnelast {

namespace {

enum class Factor { Sin, Cos, One, SinCos };

struct Jet {
  double v, d1, d2;
};

// Factor evaluated at 3t (SinCos is cos(3t) sin(3t) = sin(6t) / 2).
Jet eval(Factor f, double t) {
  switch (f) {
    case Factor::Sin:
      return {std::sin(3 * t), 3 * std::cos(3 * t), -9 * std::sin(3 * t)};
    case Factor::Cos:
      return {std::cos(3 * t), -3 * std::sin(3 * t), -9 * std::cos(3 * t)};
    case Factor::One:
      return {1.0, 0.0, 0.0};
    case Factor::SinCos:
      return {0.5 * std::sin(6 * t), 3 * std::cos(6 * t),
              -18 * std::sin(6 * t)};
  }
  return {0, 0, 0};
}

using Factors = std::array<std::array<Factor, 3>, 3>;

const Factors& factors(Variant v) {
  static const Factors paper = {{{Factor::Sin, Factor::Cos, Factor::Cos},
                                 {Factor::Cos, Factor::Sin, Factor::Cos},
                                 {Factor::Cos, Factor::One, Factor::SinCos}}};
  static const Factors sym = {{{Factor::Sin, Factor::Cos, Factor::Cos},
                               {Factor::Cos, Factor::Sin, Factor::Cos},
                               {Factor::Cos, Factor::Cos, Factor::Sin}}};
  return v == Variant::Paper ? paper : sym;
}

// Value, gradient and Hessian of every displacement component.
struct Derivatives {
  Vec3 u;
  Mat3 grad;                  // (i, a) = d_a u_i
  std::array<Mat3, 3> hess;   // hess[i](a, b) = d_a d_b u_i
};

Derivatives derivatives(const Vec3& x, Variant variant) {
  Derivatives d;
  const Factors& fac = factors(variant);
  for (int i = 0; i < 3; ++i) {
    std::array<Jet, 3> j{};
    for (int a = 0; a < 3; ++a) j[a] = eval(fac[i][a], x[a]);
    d.u[i] = j[0].v * j[1].v * j[2].v;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        double p = 1.0;
        for (int c = 0; c < 3; ++c) {
          if (a == b && c == a) {
            p *= j[c].d2;
          } else if (c == a || c == b) {
            p *= j[c].d1;
          } else {
            p *= j[c].v;
          }
        }
        d.hess[i](a, b) = p;
      }
      double g = 1.0;
      for (int c = 0; c < 3; ++c) g *= (c == a ? j[c].d1 : j[c].v);
      d.grad(i, a) = g;
    }
  }
  return d;
}

}  // namespace

Variant parse_variant(const std::string& name) {
  if (name == "paper") return Variant::Paper;
  if (name == "symmetrized") return Variant::Symmetrized;
  throw std::invalid_argument("unknown solution variant '" + name + "'");
}

std::string to_string(Variant v) {
  return v == Variant::Paper ? "paper" : "symmetrized";
}

Vec3 manufactured_u(const Vec3& x, Variant variant) {
  return derivatives(x, variant).u;
}

Mat3 manufactured_grad_u(const Vec3& x, Variant variant) {
  return derivatives(x, variant).grad;
}

SymTensor manufactured_sigma(const Vec3& x, const Material& m,
                             Variant variant) {
  return stiffness_apply(
      SymTensor::from_matrix(manufactured_grad_u(x, variant)), m);
}

Vec3 manufactured_f(const Vec3& x, const Material& m, Variant variant) {
  // div sigma = mu lap u + (mu + lambda) grad div u
  const Derivatives d = derivatives(x, variant);
  Vec3 div_sigma;
  for (int i = 0; i < 3; ++i) {
    double grad_div = 0;
    for (int j = 0; j < 3; ++j) grad_div += d.hess[j](i, j);
    div_sigma[i] = m.mu * d.hess[i].trace() + (m.mu + m.lambda) * grad_div;
  }
  return -div_sigma;
}

ExactSolution manufactured_solution(const Material& m, Variant variant) {
  ExactSolution s;
  s.u = [variant](const Vec3& x) { return manufactured_u(x, variant); };
  s.grad_u = [variant](const Vec3& x) {
    return manufactured_grad_u(x, variant);
  };
  s.sigma = [m, variant](const Vec3& x) {
    return manufactured_sigma(x, m, variant);
  };
  s.div_sigma = [m, variant](const Vec3& x) {
    return Vec3(-manufactured_f(x, m, variant));
  };
  return s;
}

ExactSolution affine_solution(const Vec3& a, const Mat3& g, const Material& m) {
  const SymTensor sigma = stiffness_apply(SymTensor::from_matrix(g), m);
  ExactSolution s;
  s.u = [a, g](const Vec3& x) { return Vec3(a + g * x); };
  s.grad_u = [g](const Vec3&) { return g; };
  s.sigma = [sigma](const Vec3&) { return sigma; };
  s.div_sigma = [](const Vec3&) { return Vec3(Vec3::Zero()); };
  return s;
}

}  // namespace nnelast
