#pragma once

#include <array>
#include <random>
#include <vector>

#include "nnelast/interpolation.hpp"
#include "nnelast/symtensor.hpp"
#include "nnelast/tet_geometry.hpp"

namespace nnelast {

/// Symmetric tensor field whose components are polynomials in x, y, z.
struct PolyTensorField {
  struct Term {
    std::array<int, 3> power{};
    SymTensor coeff;
  };
  std::vector<Term> terms;

  SymTensor value(const Vec3& x) const;
  Vec3 divergence(const Vec3& x) const;
  TensorField field() const;
};

/// All monomials of total degree <= `degree`, coefficients uniform in [-1, 1].
PolyTensorField random_poly_field(std::mt19937_64& rng, int degree);

/// Vertices uniform in the unit cube, rejected until h_T / inradius <= ratio.
Tet random_tet(std::mt19937_64& rng, double max_ratio = 20.0);

}  // namespace nnelast
