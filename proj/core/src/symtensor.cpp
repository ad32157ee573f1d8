#include "nnelast/symtensor.hpp"

#include <cmath>
#include <stdexcept>

namespace nnelast {

namespace {
constexpr int kRow[6] = {0, 1, 2, 0, 0, 1};
constexpr int kCol[6] = {0, 1, 2, 1, 2, 2};
constexpr double kFrobeniusWeight[6] = {1, 1, 1, 2, 2, 2};
}  // namespace

SymTensor SymTensor::unit(int component) {
  SymTensor t;
  t.c_[component] = 1.0;
  return t;
}

SymTensor SymTensor::from_matrix(const Mat3& m) {
  SymTensor t;
  for (int k = 0; k < kSize; ++k) {
    t.c_[k] = 0.5 * (m(kRow[k], kCol[k]) + m(kCol[k], kRow[k]));
  }
  return t;
}

Mat3 SymTensor::matrix() const {
  Mat3 m;
  for (int k = 0; k < kSize; ++k) {
    m(kRow[k], kCol[k]) = c_[k];
    m(kCol[k], kRow[k]) = c_[k];
  }
  return m;
}

Vec3 SymTensor::apply(const Vec3& v) const {
  return {c_[XX] * v[0] + c_[XY] * v[1] + c_[XZ] * v[2],
          c_[XY] * v[0] + c_[YY] * v[1] + c_[YZ] * v[2],
          c_[XZ] * v[0] + c_[YZ] * v[1] + c_[ZZ] * v[2]};
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  for (int k = 0; k < kSize; ++k) c_[k] += o.c_[k];
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
  for (int k = 0; k < kSize; ++k) c_[k] -= o.c_[k];
  return *this;
}

SymTensor& SymTensor::operator*=(double s) {
  for (auto& v : c_) v *= s;
  return *this;
}

SymTensor sym_outer(const Vec3& a, const Vec3& b) {
  return {a[0] * b[0],
          a[1] * b[1],
          a[2] * b[2],
          0.5 * (a[0] * b[1] + a[1] * b[0]),
          0.5 * (a[0] * b[2] + a[2] * b[0]),
          0.5 * (a[1] * b[2] + a[2] * b[1])};
}

double trace(const SymTensor& t) { return t.xx() + t.yy() + t.zz(); }

SymTensor deviator(const SymTensor& t) {
  const double m = trace(t) / 3.0;
  SymTensor d = t;
  d[SymTensor::XX] -= m;
  d[SymTensor::YY] -= m;
  d[SymTensor::ZZ] -= m;
  return d;
}

double frobenius(const SymTensor& t, const SymTensor& s) {
  double sum = 0;
  for (int k = 0; k < SymTensor::kSize; ++k) {
    sum += kFrobeniusWeight[k] * t[k] * s[k];
  }
  return sum;
}

double frobenius_norm(const SymTensor& t) { return std::sqrt(frobenius(t, t)); }

double normal_normal(const SymTensor& t, const Vec3& n) {
  return n.dot(t.apply(n));
}

SymTensor congruence(const Mat3& b, const SymTensor& t) {
  return SymTensor::from_matrix(b * t.matrix() * b.transpose());
}

Material Material::from_lame(double mu, double lambda) {
  if (!(mu > 0) || !(lambda > 0) || !std::isfinite(mu) ||
      !std::isfinite(lambda)) {
    throw std::invalid_argument("Lame parameters must be positive and finite");
  }
  return {mu, lambda};
}

Material Material::from_young_poisson(double young, double poisson) {
  if (!(young > 0) || !(poisson > 0) || !(poisson < 0.5)) {
    throw std::invalid_argument("need E > 0 and 0 < nu < 1/2");
  }
  const double mu = young / (2.0 * (1.0 + poisson));
  const double lambda =
      young * poisson / ((1.0 + poisson) * (1.0 - 2.0 * poisson));
  return from_lame(mu, lambda);
}

// Evaluated in extended precision, rounded once per entry.
SymTensor compliance_apply(const SymTensor& t, const Material& m) {
  using L = long double;
  const L mu = m.mu;
  const L lambda = m.lambda;
  const L tr = L(t.xx()) + L(t.yy()) + L(t.zz());
  const L s = tr / (3 * (3 * lambda + 2 * mu));
  SymTensor r;
  for (int k = 0; k < SymTensor::kSize; ++k) {
    L v = t[k];
    if (k < 3) v -= tr / 3;
    v /= 2 * mu;
    if (k < 3) v += s;
    r[k] = static_cast<double>(v);
  }
  return r;
}

SymTensor stiffness_apply(const SymTensor& e, const Material& m) {
  using L = long double;
  const L tr = L(e.xx()) + L(e.yy()) + L(e.zz());
  SymTensor r;
  for (int k = 0; k < SymTensor::kSize; ++k) {
    L v = 2 * L(m.mu) * e[k];
    if (k < 3) v += L(m.lambda) * tr;
    r[k] = static_cast<double>(v);
  }
  return r;
}

Eigen::Matrix<double, 6, 6> compliance_form(const Material& m) {
  // (A t) : s = t:s / (2 mu) + (1/(3(3 lambda + 2 mu)) - 1/(6 mu)) tr t tr s
  Eigen::Matrix<double, 6, 6> w = Eigen::Matrix<double, 6, 6>::Zero();
  const double a = 1.0 / (2.0 * m.mu);
  const double b =
      1.0 / (3.0 * (3.0 * m.lambda + 2.0 * m.mu)) - 1.0 / (6.0 * m.mu);
  for (int k = 0; k < 6; ++k) w(k, k) = a * kFrobeniusWeight[k];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) w(i, j) += b;
  }
  return w;
}

}  // namespace nnelast
