#pragma once

#include <array>

#include <Eigen/Dense>

namespace nnelast {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Symmetric 3x3 tensor stored as six components (xx, yy, zz, xy, xz, yz).
///
/// Off-diagonal components are stored unscaled; the Frobenius product counts
/// each of them twice, as in the full 9-entry sum.
class SymTensor {
 public:
  enum Component : int { XX = 0, YY = 1, ZZ = 2, XY = 3, XZ = 4, YZ = 5 };
  static constexpr int kSize = 6;

  constexpr SymTensor() = default;
  constexpr SymTensor(double xx, double yy, double zz, double xy, double xz,
                      double yz)
      : c_{xx, yy, zz, xy, xz, yz} {}

  static SymTensor identity() { return {1, 1, 1, 0, 0, 0}; }
  static SymTensor zero() { return {}; }
  /// Unit tensor of the canonical basis: diagonal E_ii, or e_i (.) e_j.
  static SymTensor unit(int component);
  /// Symmetric part of a full matrix.
  static SymTensor from_matrix(const Mat3& m);

  double operator[](int i) const { return c_[i]; }
  double& operator[](int i) { return c_[i]; }
  const std::array<double, kSize>& data() const { return c_; }

  double xx() const { return c_[XX]; }
  double yy() const { return c_[YY]; }
  double zz() const { return c_[ZZ]; }
  double xy() const { return c_[XY]; }
  double xz() const { return c_[XZ]; }
  double yz() const { return c_[YZ]; }

  Mat3 matrix() const;
  Vec3 apply(const Vec3& v) const;

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
  SymTensor& operator*=(double s);

  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(SymTensor a, double s) { return a *= s; }
  friend SymTensor operator*(double s, SymTensor a) { return a *= s; }
  friend SymTensor operator/(SymTensor a, double s) { return a *= 1.0 / s; }
  friend SymTensor operator-(SymTensor a) { return a *= -1.0; }

 private:
  std::array<double, kSize> c_{};
};

/// (a b^T + b a^T) / 2
SymTensor sym_outer(const Vec3& a, const Vec3& b);
double trace(const SymTensor& t);
SymTensor deviator(const SymTensor& t);
/// Frobenius product t : s.
double frobenius(const SymTensor& t, const SymTensor& s);
double frobenius_norm(const SymTensor& t);
/// n . t n
double normal_normal(const SymTensor& t, const Vec3& n);
/// B t B^T
SymTensor congruence(const Mat3& b, const SymTensor& t);

/// Isotropic material given by its Lame parameters.
struct Material {
  double mu = 0;
  double lambda = 0;

  /// Throws std::invalid_argument unless both parameters are positive.
  static Material from_lame(double mu, double lambda);
  /// Young's modulus E and Poisson ratio nu in (0, 1/2).
  static Material from_young_poisson(double young, double poisson);
};

/// Compliance A = C^{-1}: dev(t)/(2 mu) + tr(t) Id / (3 (3 lambda + 2 mu)).
SymTensor compliance_apply(const SymTensor& t, const Material& m);
/// Stiffness C: 2 mu e + lambda tr(e) Id.
SymTensor stiffness_apply(const SymTensor& e, const Material& m);

/// 6x6 matrix W with (A t) : s = t^T W s in component storage.
Eigen::Matrix<double, 6, 6> compliance_form(const Material& m);

}  // namespace nnelast
