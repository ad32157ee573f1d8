#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nnelast/symtensor.hpp"
#include "nnelast/tet_geometry.hpp"

namespace nnelast {

struct MeshFace {
  std::array<int, 3> vertices{};  ///< global vertex ids, ascending
  std::array<int, 2> owner{-1, -1};
  std::array<int, 2> local_face{-1, -1};
  bool boundary() const { return owner[1] < 0; }
};

/// Conforming tetrahedral mesh. Tets are stored with positive orientation;
/// local face i of a tet is opposite its local vertex i.
struct TetMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 4>> tets;
  std::vector<MeshFace> faces;
  std::vector<std::array<int, 4>> tet_faces;  ///< global face of local face i
  std::vector<bool> boundary_vertex;
  std::vector<double> h;  ///< per-tet diameter
  double h_max = 0;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_tets() const { return static_cast<int>(tets.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }
  Tet tet(int e) const;
};

struct Box {
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Ones();
};

/// n^3 cubes, each split into six tets sharing the main diagonal.
TetMesh generate_box(int n, const Box& box = {});

/// Builds a mesh from raw vertices and tets: orients every tet positively,
/// extracts faces and computes element sizes. `reoriented` (optional)
/// receives the indices of tets whose vertex order was flipped.
/// Throws DegenerateTet or NonConformingMesh.
TetMesh build_mesh(std::vector<Vec3> vertices,
                   std::vector<std::array<int, 4>> tets,
                   std::vector<int>* reoriented = nullptr);

/// (Re)computes faces, tet_faces and boundary flags.
void extract_faces(TetMesh& mesh);

struct MeshQualityReport {
  double h_min = 0;
  double h_max = 0;
  double max_shape_ratio = 0;  ///< max h_T / (2 inradius)
  int num_vertices = 0;
  int num_tets = 0;
  int num_faces = 0;
  int num_interior_faces = 0;
  int num_boundary_faces = 0;
  int num_boundary_vertices = 0;
};

MeshQualityReport quality(const TetMesh& mesh);

struct ImportedMesh {
  TetMesh mesh;
  std::vector<std::string> warnings;
};

/// Reads the "tetmesh 1" ASCII format. Throws ParseError, IoError,
/// DegenerateTet, NonConformingMesh.
ImportedMesh import_ascii(const std::filesystem::path& path);
ImportedMesh parse_ascii(const std::string& text);
void export_ascii(const TetMesh& mesh, const std::filesystem::path& path);
std::string format_ascii(const TetMesh& mesh);

/// FNV-1a over tets and face keys.
std::uint64_t topology_hash(const TetMesh& mesh);

}  // namespace nnelast
