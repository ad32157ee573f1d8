#include "nnelast/tet_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nnelast/errors.hpp"

namespace nnelast {

Tet Tet::reference() {
  return {{Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)}};
}

std::array<int, 3> face_vertices(int f) {
  std::array<int, 3> v{};
  int k = 0;
  for (int i = 0; i < 4; ++i) {
    if (i != f) v[k++] = i;
  }
  return v;
}

TetGeometry geometry(const Tet& tet) {
  TetGeometry g;
  g.vertices = tet.vertices;
  const auto& x = tet.vertices;

  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      g.diameter = std::max(g.diameter, (x[j] - x[i]).norm());
    }
  }

  Mat3 b;
  b.col(0) = x[1] - x[0];
  b.col(1) = x[2] - x[0];
  b.col(2) = x[3] - x[0];
  const double det = b.determinant();
  g.signed_volume = det / 6.0;
  g.volume = std::abs(g.signed_volume);
  if (!(g.volume >= 1e-14 * std::pow(g.diameter, 3)) || g.diameter == 0) {
    std::ostringstream msg;
    msg << "degenerate tetrahedron (volume " << g.signed_volume
        << ", diameter " << g.diameter << ")";
    throw DegenerateTet(msg.str());
  }

  const Mat3 binv = b.inverse();
  for (int k = 1; k < 4; ++k) g.grad[k] = binv.row(k - 1).transpose();
  g.grad[0] = -(g.grad[1] + g.grad[2] + g.grad[3]);

  double area_sum = 0;
  for (int i = 0; i < 4; ++i) {
    const double len = g.grad[i].norm();
    g.normal[i] = -g.grad[i] / len;
    g.face_area[i] = 3.0 * g.volume * len;
    area_sum += g.face_area[i];
  }
  g.inradius = 3.0 * g.volume / area_sum;

  // The edge shared by faces i and j joins the two remaining vertices a < b.
  // Edges through vertex 0 point away from it, the others point from b to a;
  // on the reference element this gives e_12 = (0,1,-1), e_23 = (0,0,1), ...
  for (int i = 0; i < 4; ++i) {
    g.edge[i][i] = Vec3::Zero();
    for (int j = i + 1; j < 4; ++j) {
      int a = -1;
      int c = -1;
      for (int v = 0; v < 4; ++v) {
        if (v == i || v == j) continue;
        (a < 0 ? a : c) = v;
      }
      Vec3 e = a == 0 ? Vec3(x[c] - x[a]) : Vec3(x[a] - x[c]);
      e.normalize();
      g.edge[i][j] = e;
      g.edge[j][i] = e;
    }
  }
  return g;
}

Barycentric TetGeometry::barycentric(const Vec3& p) const {
  Barycentric l{};
  const Vec3 d = p - vertices[0];
  for (int k = 1; k < 4; ++k) l[k] = grad[k].dot(d);
  l[0] = 1.0 - l[1] - l[2] - l[3];
  return l;
}

Vec3 TetGeometry::point(const Barycentric& l) const {
  return l[0] * vertices[0] + l[1] * vertices[1] + l[2] * vertices[2] +
         l[3] * vertices[3];
}

}  // namespace nnelast
