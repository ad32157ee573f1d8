#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <set>

#include "nnelast/errors.hpp"
#include "nnelast/mesh.hpp"

using namespace nnelast;

namespace {

// Faces counted by brute force over all tets.
std::map<std::array<int, 3>, int> count_faces(const TetMesh& m) {
  std::map<std::array<int, 3>, int> faces;
  for (const auto& t : m.tets) {
    for (int f = 0; f < 4; ++f) {
      std::array<int, 3> key{};
      int k = 0;
      for (int v = 0; v < 4; ++v) {
        if (v != f) key[k++] = t[v];
      }
      std::sort(key.begin(), key.end());
      ++faces[key];
    }
  }
  return faces;
}

}  // namespace

TEST(Mesh, SingleCube) {
  const TetMesh m = generate_box(1);
  EXPECT_EQ(m.num_vertices(), 8);
  EXPECT_EQ(m.num_tets(), 6);
  EXPECT_EQ(m.num_faces(), 18);
  const MeshQualityReport q = quality(m);
  EXPECT_EQ(q.num_boundary_faces, 12);
  EXPECT_EQ(q.num_interior_faces, 6);
  for (double h : m.h) EXPECT_NEAR(h, std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(m.h_max, std::sqrt(3.0), 1e-15);
  EXPECT_GE(q.max_shape_ratio, 1.0);
}

TEST(Mesh, CountsMatchEnumeration) {
  for (int n : {1, 2, 3}) {
    const TetMesh m = generate_box(n);
    EXPECT_EQ(m.num_vertices(), (n + 1) * (n + 1) * (n + 1));
    EXPECT_EQ(m.num_tets(), 6 * n * n * n);
    const auto faces = count_faces(m);
    EXPECT_EQ(m.num_faces(), static_cast<int>(faces.size()));
    int boundary = 0;
    for (const auto& [key, c] : faces) {
      EXPECT_LE(c, 2);
      boundary += c == 1;
    }
    EXPECT_EQ(quality(m).num_boundary_faces, boundary);
    EXPECT_EQ(boundary, 12 * n * n);
  }
}

TEST(Mesh, Invariants) {
  const TetMesh m = generate_box(3, Box{Vec3(-1, 0, 2), Vec3(1, 0.5, 3)});
  double volume = 0;
  for (int e = 0; e < m.num_tets(); ++e) {
    const TetGeometry g = geometry(m.tet(e));
    EXPECT_GT(g.signed_volume, 0);
    volume += g.volume;
  }
  EXPECT_NEAR(volume, 2 * 0.5 * 1, 1e-12);

  for (int f = 0; f < m.num_faces(); ++f) {
    const MeshFace& face = m.faces[f];
    EXPECT_TRUE(std::is_sorted(face.vertices.begin(), face.vertices.end()));
    for (int s = 0; s < (face.boundary() ? 1 : 2); ++s) {
      const auto& t = m.tets[face.owner[s]];
      std::array<int, 3> key{};
      int k = 0;
      for (int v = 0; v < 4; ++v) {
        if (v != face.local_face[s]) key[k++] = t[v];
      }
      std::sort(key.begin(), key.end());
      EXPECT_EQ(key, face.vertices);
      EXPECT_EQ(m.tet_faces[face.owner[s]][face.local_face[s]], f);
    }
  }
}

TEST(Mesh, RefinementHalvesH) {
  const TetMesh a = generate_box(2);
  const TetMesh b = generate_box(4);
  EXPECT_NEAR(b.h_max, a.h_max / 2, 1e-15);
  EXPECT_NEAR(quality(a).max_shape_ratio, quality(b).max_shape_ratio, 1e-12);
  EXPECT_NEAR(quality(a).max_shape_ratio, quality(generate_box(1)).max_shape_ratio,
              1e-12);
}

TEST(Mesh, SingleTet) {
  const TetMesh m = build_mesh({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0),
                                Vec3(0, 0, 1)},
                               {{0, 1, 2, 3}});
  const MeshQualityReport q = quality(m);
  EXPECT_EQ(q.num_boundary_faces, 4);
  EXPECT_EQ(q.num_interior_faces, 0);
}

TEST(Mesh, NonConformingThrows) {
  // three tets sharing one face
  std::vector<Vec3> v = {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0),
                         Vec3(0, 0, 1), Vec3(0, 0, -1), Vec3(0.2, 0.2, 2)};
  EXPECT_THROW(build_mesh(v, {{0, 1, 2, 3}, {0, 2, 1, 4}, {0, 1, 2, 5}}),
               NonConformingMesh);
}

TEST(MeshIo, RoundTripSingleTet) {
  const std::string text =
      "tetmesh 1\n# comment\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\ntets 1\n0 1 2 3\n";
  const ImportedMesh a = parse_ascii(text);
  EXPECT_TRUE(a.warnings.empty());
  const ImportedMesh b = parse_ascii(format_ascii(a.mesh));
  EXPECT_EQ(a.mesh.vertices, b.mesh.vertices);
  EXPECT_EQ(a.mesh.tets, b.mesh.tets);
}

TEST(MeshIo, InvertedTetIsRepaired) {
  const ImportedMesh m = parse_ascii(
      "tetmesh 1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\ntets 1\n0 2 1 3\n");
  EXPECT_EQ(m.warnings.size(), 1u);
  EXPECT_GT(geometry(m.mesh.tet(0)).signed_volume, 0);
}

TEST(MeshIo, BoxRoundTripKeepsTopology) {
  const TetMesh m = generate_box(2);
  const auto path = std::filesystem::temp_directory_path() / "nnelast_box2.mesh";
  export_ascii(m, path);
  const ImportedMesh back = import_ascii(path);
  std::filesystem::remove(path);
  EXPECT_EQ(topology_hash(m), topology_hash(back.mesh));
  EXPECT_EQ(m.vertices, back.mesh.vertices);
}

TEST(MeshIo, ParseErrorsCarryLineNumbers) {
  try {
    parse_ascii("tetmesh 1\nvertices 2\n0 0 0\n1 x 0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  EXPECT_THROW(parse_ascii("tetmesh 2\n"), ParseError);
  EXPECT_THROW(parse_ascii("tetmesh 1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n"
                           "tets 1\n0 1 2 7\n"),
               ParseError);
  EXPECT_THROW(import_ascii("/nonexistent/file.mesh"), IoError);
}

TEST(MeshIo, DegenerateTetRejected) {
  EXPECT_THROW(parse_ascii("tetmesh 1\nvertices 4\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n"
                           "tets 1\n0 1 2 3\n"),
               DegenerateTet);
}
