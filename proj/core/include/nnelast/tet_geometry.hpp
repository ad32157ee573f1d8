#pragma once

#include <array>

#include "nnelast/barycentric.hpp"
#include "nnelast/symtensor.hpp"

namespace nnelast {

/// Four vertices; face i is opposite vertex i.
struct Tet {
  std::array<Vec3, 4> vertices;

  /// (0,0,0), (1,0,0), (0,1,0), (0,0,1)
  static Tet reference();
};

/// Constant per-element geometric quantities.
struct TetGeometry {
  std::array<Vec3, 4> vertices;
  /// grad lambda_i; they sum to zero.
  std::array<Vec3, 4> grad;
  /// Unit exterior normal of face i, equal to -grad_i / |grad_i|.
  std::array<Vec3, 4> normal;
  std::array<double, 4> face_area{};
  double volume = 0;         ///< |T| > 0
  double signed_volume = 0;  ///< orientation of the stored vertex order
  double diameter = 0;       ///< longest edge
  double inradius = 0;
  /// Unit vector along the edge shared by faces i and j (i != j);
  /// edge[i][j] == edge[j][i]. Diagonal entries are zero.
  std::array<std::array<Vec3, 4>, 4> edge;

  Barycentric barycentric(const Vec3& x) const;
  Vec3 point(const Barycentric& lambda) const;
};

/// Throws DegenerateTet when |volume| < 1e-14 diam^3.
TetGeometry geometry(const Tet& tet);

/// Local indices of the three vertices of face f, ascending.
std::array<int, 3> face_vertices(int f);

}  // namespace nnelast
