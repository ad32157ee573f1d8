#include "nnelast/mesh.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "nnelast/errors.hpp"

namespace nnelast {

Tet TetMesh::tet(int e) const {
  const auto& t = tets[e];
  return {{vertices[t[0]], vertices[t[1]], vertices[t[2]], vertices[t[3]]}};
}

TetMesh generate_box(int n, const Box& box) {
  if (n < 1) throw std::invalid_argument("generate_box: n must be >= 1");
  std::vector<Vec3> vertices;
  vertices.reserve(static_cast<size_t>(n + 1) * (n + 1) * (n + 1));
  const Vec3 step = (box.hi - box.lo) / n;
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= n; ++j) {
      for (int i = 0; i <= n; ++i) {
        vertices.emplace_back(box.lo + Vec3(i * step[0], j * step[1],
                                            k * step[2]));
      }
    }
  }
  auto vid = [n](int i, int j, int k) {
    return i + (n + 1) * (j + (n + 1) * k);
  };

  static constexpr std::array<std::array<int, 3>, 6> kPerms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  }};
  std::vector<std::array<int, 4>> tets;
  tets.reserve(static_cast<size_t>(6) * n * n * n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        for (const auto& p : kPerms) {
          std::array<int, 3> c{i, j, k};
          std::array<int, 4> t{};
          t[0] = vid(c[0], c[1], c[2]);
          for (int s = 0; s < 3; ++s) {
            ++c[p[s]];
            t[s + 1] = vid(c[0], c[1], c[2]);
          }
          tets.push_back(t);
        }
      }
    }
  }
  return build_mesh(std::move(vertices), std::move(tets));
}

TetMesh build_mesh(std::vector<Vec3> vertices,
                   std::vector<std::array<int, 4>> tets,
                   std::vector<int>* reoriented) {
  TetMesh mesh;
  mesh.vertices = std::move(vertices);
  mesh.tets = std::move(tets);
  const int nv = mesh.num_vertices();
  mesh.h.resize(mesh.tets.size());
  for (int e = 0; e < mesh.num_tets(); ++e) {
    auto& t = mesh.tets[e];
    for (int v : t) {
      if (v < 0 || v >= nv) {
        throw std::out_of_range("tet " + std::to_string(e) +
                                " references vertex " + std::to_string(v));
      }
    }
    const TetGeometry g = geometry(mesh.tet(e));
    if (g.signed_volume < 0) {
      std::swap(t[2], t[3]);
      if (reoriented != nullptr) reoriented->push_back(e);
    }
    mesh.h[e] = g.diameter;
    mesh.h_max = std::max(mesh.h_max, g.diameter);
  }
  extract_faces(mesh);
  return mesh;
}

void extract_faces(TetMesh& mesh) {
  mesh.faces.clear();
  mesh.tet_faces.assign(mesh.tets.size(), {-1, -1, -1, -1});
  std::map<std::array<int, 3>, int> index;
  for (int e = 0; e < mesh.num_tets(); ++e) {
    const auto& t = mesh.tets[e];
    for (int f = 0; f < 4; ++f) {
      const auto lv = face_vertices(f);
      std::array<int, 3> key{t[lv[0]], t[lv[1]], t[lv[2]]};
      std::sort(key.begin(), key.end());
      auto [it, inserted] = index.try_emplace(key, mesh.num_faces());
      if (inserted) {
        MeshFace face;
        face.vertices = key;
        face.owner[0] = e;
        face.local_face[0] = f;
        mesh.faces.push_back(face);
      } else {
        MeshFace& face = mesh.faces[it->second];
        if (face.owner[1] >= 0) {
          std::ostringstream msg;
          msg << "face (" << key[0] << ", " << key[1] << ", " << key[2]
              << ") has more than two owners";
          throw NonConformingMesh(msg.str());
        }
        face.owner[1] = e;
        face.local_face[1] = f;
      }
      mesh.tet_faces[e][f] = it->second;
    }
  }
  mesh.boundary_vertex.assign(mesh.vertices.size(), false);
  for (const auto& face : mesh.faces) {
    if (!face.boundary()) continue;
    for (int v : face.vertices) mesh.boundary_vertex[v] = true;
  }
}

MeshQualityReport quality(const TetMesh& mesh) {
  MeshQualityReport r;
  r.num_vertices = mesh.num_vertices();
  r.num_tets = mesh.num_tets();
  r.num_faces = mesh.num_faces();
  r.h_min = mesh.tets.empty() ? 0.0 : mesh.h[0];
  for (int e = 0; e < mesh.num_tets(); ++e) {
    const TetGeometry g = geometry(mesh.tet(e));
    r.h_min = std::min(r.h_min, g.diameter);
    r.h_max = std::max(r.h_max, g.diameter);
    r.max_shape_ratio =
        std::max(r.max_shape_ratio, g.diameter / (2.0 * g.inradius));
  }
  for (const auto& f : mesh.faces) {
    (f.boundary() ? r.num_boundary_faces : r.num_interior_faces)++;
  }
  r.num_boundary_vertices = static_cast<int>(
      std::count(mesh.boundary_vertex.begin(), mesh.boundary_vertex.end(),
                 true));
  return r;
}

namespace {

struct LineReader {
  std::istringstream in;
  int line = 0;

  explicit LineReader(const std::string& text) : in(text) {}

  // Next non-empty line with comments stripped; false at end of input.
  bool next(std::istringstream& out) {
    std::string s;
    while (std::getline(in, s)) {
      ++line;
      if (const auto hash = s.find('#'); hash != std::string::npos) {
        s.erase(hash);
      }
      if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
      out.clear();
      out.str(s);
      return true;
    }
    return false;
  }

  std::istringstream expect() {
    std::istringstream ls;
    if (!next(ls)) throw ParseError("unexpected end of file", line);
    return ls;
  }
};

void expect_end(std::istringstream& ls, int line) {
  std::string extra;
  if (ls >> extra) throw ParseError("unexpected token '" + extra + "'", line);
}

int read_count(LineReader& r, const std::string& keyword) {
  auto ls = r.expect();
  std::string word;
  long long n = -1;
  if (!(ls >> word) || word != keyword || !(ls >> n) || n < 0) {
    throw ParseError("expected '" + keyword + " <count>'", r.line);
  }
  expect_end(ls, r.line);
  return static_cast<int>(n);
}

}  // namespace

ImportedMesh parse_ascii(const std::string& text) {
  LineReader r(text);
  {
    auto ls = r.expect();
    std::string magic;
    int version = 0;
    if (!(ls >> magic >> version) || magic != "tetmesh" || version != 1) {
      throw ParseError("expected header 'tetmesh 1'", r.line);
    }
    expect_end(ls, r.line);
  }

  const int nv = read_count(r, "vertices");
  std::vector<Vec3> vertices(nv);
  for (auto& v : vertices) {
    auto ls = r.expect();
    if (!(ls >> v[0] >> v[1] >> v[2])) {
      throw ParseError("expected three vertex coordinates", r.line);
    }
    expect_end(ls, r.line);
  }

  const int nt = read_count(r, "tets");
  std::vector<std::array<int, 4>> tets(nt);
  for (auto& t : tets) {
    auto ls = r.expect();
    if (!(ls >> t[0] >> t[1] >> t[2] >> t[3])) {
      throw ParseError("expected four vertex indices", r.line);
    }
    expect_end(ls, r.line);
    for (int v : t) {
      if (v < 0 || v >= nv) {
        throw ParseError("vertex index " + std::to_string(v) + " out of range",
                         r.line);
      }
    }
  }
  std::istringstream rest;
  if (r.next(rest)) throw ParseError("trailing content", r.line);

  ImportedMesh out;
  std::vector<int> flipped;
  out.mesh = build_mesh(std::move(vertices), std::move(tets), &flipped);
  for (int e : flipped) {
    out.warnings.push_back("tet " + std::to_string(e) +
                           " had negative orientation; vertex order repaired");
  }
  return out;
}

ImportedMesh import_ascii(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ascii(buf.str());
}

std::string format_ascii(const TetMesh& mesh) {
  std::ostringstream out;
  out << "tetmesh 1\n";
  out << "vertices " << mesh.num_vertices() << "\n";
  char line[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(line, sizeof line, "%.17g %.17g %.17g\n", v[0], v[1], v[2]);
    out << line;
  }
  out << "tets " << mesh.num_tets() << "\n";
  for (const auto& t : mesh.tets) {
    out << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << '\n';
  }
  return out.str();
}

void export_ascii(const TetMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << format_ascii(mesh);
  if (!out) throw IoError("write failed for " + path.string());
}

std::uint64_t topology_hash(const TetMesh& mesh) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::int64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(mesh.num_vertices());
  for (const auto& t : mesh.tets) {
    for (int v : t) mix(v);
  }
  for (const auto& f : mesh.faces) {
    for (int v : f.vertices) mix(v);
    mix(f.owner[0]);
    mix(f.owner[1]);
  }
  return h;
}

}  // namespace nnelast
