#include "nnelast/study.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

#include "nnelast/element.hpp"
#include "nnelast/errors.hpp"
#include "nnelast/quadrature.hpp"

namespace nnelast {

void StudyConfig::validate() const {
  if (nus.empty()) throw std::invalid_argument("no Poisson ratio given");
  for (double nu : nus) {
    if (!(nu > 0.0 && nu < 0.5)) {
      throw std::invalid_argument("Poisson ratio must lie in (0, 1/2), got " +
                                  std::to_string(nu));
    }
  }
  if (!(young > 0.0)) throw std::invalid_argument("Young's modulus must be > 0");
  if (levels.empty()) throw std::invalid_argument("no refinement level given");
  for (size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 1) throw std::invalid_argument("levels must be >= 1");
    if (i > 0 && levels[i] <= levels[i - 1]) {
      throw std::invalid_argument("levels must be strictly increasing");
    }
  }
  if (!(solver_tol > 0.0)) {
    throw std::invalid_argument("solver tolerance must be > 0");
  }
}

DiscreteProblem build_problem(const TetMesh& mesh, const Material& material,
                              const ExactSolution& exact) {
  DiscreteProblem p;
  p.map = build_dof_map(mesh);
  p.dirichlet = apply_dirichlet(exact.u, mesh, p.map);
  const auto div_sigma = exact.div_sigma;
  const VectorField load = [div_sigma](const Vec3& x) {
    return Vec3(-div_sigma(x));
  };
  p.system = assemble(mesh, p.map, material, load, p.dirichlet);
  return p;
}

DiscreteSolution solve_problem(const DiscreteProblem& problem,
                               double tolerance) {
  SolveResult r = solve(problem.system, tolerance);
  DiscreteSolution s;
  s.trace = problem.dirichlet;
  s.trace.set_free(problem.map, r.x);
  s.x = std::move(r.x);
  s.report = std::move(r.report);
  return s;
}

ErrorNorms compute_errors(const TetMesh& mesh, const GlobalDofMap& map,
                          const DiscreteSolution& solution,
                          const ExactSolution& exact) {
  const QuadratureRule& q = quad_rule(QuadKind::Deg5Point14);
  double eu = 0, es = 0, esig = 0, ediv = 0;
  for (int e = 0; e < mesh.num_tets(); ++e) {
    const StressShapeSet shapes = nodal_basis(geometry(mesh.tet(e)));
    const TetGeometry& g = shapes.geom;

    DofVector dofs;
    for (int k = 0; k < kStressDofs; ++k) {
      dofs[k] = solution.x[map.stress_gather[e][k]];
    }
    const TensorPoly sigma_h = shapes.combine(dofs);
    const VertexVectors div_h = sigma_h.divergence(g.grad);

    VertexVectors u_h;
    for (int j = 0; j < 4; ++j) {
      for (int d = 0; d < 3; ++d) {
        u_h(j, d) = solution.x[map.displacement_gather[e][3 * j + d]];
      }
    }
    const SymTensor strain_h =
        trace_lift(g, solution.trace.element_values(mesh, e)).strain();

    for (size_t p = 0; p < q.points.size(); ++p) {
      const Barycentric& l = q.points[p];
      const Vec3 x = g.point(l);
      const double w = q.weights[p] * g.volume;
      eu += w * (exact.u(x) - evaluate_affine(u_h, l)).squaredNorm();
      const SymTensor strain = SymTensor::from_matrix(exact.grad_u(x));
      es += w * std::pow(frobenius_norm(strain - strain_h), 2);
      esig += w * std::pow(frobenius_norm(exact.sigma(x) - sigma_h.at(l)), 2);
      ediv += w * (exact.div_sigma(x) - evaluate_affine(div_h, l)).squaredNorm();
    }
  }
  return {std::sqrt(eu), std::sqrt(es), std::sqrt(esig), std::sqrt(ediv)};
}

double exact_norm(const TetMesh& mesh, const ExactSolution& exact) {
  const QuadratureRule& q = quad_rule(QuadKind::Deg5Point14);
  double sum = 0;
  for (int e = 0; e < mesh.num_tets(); ++e) {
    const TetGeometry g = geometry(mesh.tet(e));
    for (size_t p = 0; p < q.points.size(); ++p) {
      const Vec3 x = g.point(q.points[p]);
      sum += q.weights[p] * g.volume *
             (exact.u(x).squaredNorm() + exact.grad_u(x).squaredNorm() +
              std::pow(frobenius_norm(exact.sigma(x)), 2) +
              exact.div_sigma(x).squaredNorm());
    }
  }
  return std::sqrt(sum);
}

double eoc(double e_coarse, double e_fine, double h_coarse, double h_fine) {
  return std::log(e_coarse / e_fine) / std::log(h_coarse / h_fine);
}

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void export_level(const DiscreteProblem& problem, const std::filesystem::path& dir,
                  double nu, int level) {
  std::filesystem::create_directories(dir);
  char stem[64];
  std::snprintf(stem, sizeof stem, "nu%g_n%d", nu, level);
  export_coordinate(problem.system.matrix(),
                    dir / (std::string("K_") + stem + ".txt"));
  export_vector(problem.system.rhs, dir / (std::string("rhs_") + stem + ".txt"));
}

// ",u,strain,sigma,divsigma"
std::string norms(const ErrorNorms& e) {
  return ',' + format_double(e.u) + ',' + format_double(e.strain) + ',' +
         format_double(e.sigma) + ',' + format_double(e.divsigma);
}

ErrorNorms divide(const ErrorNorms& e, double s) {
  return {e.u / s, e.strain / s, e.sigma / s, e.divsigma / s};
}

}  // namespace

std::vector<ErrorRecord> run_convergence(const StudyConfig& cfg,
                                         const ProgressFn& progress) {
  cfg.validate();
  std::map<int, TetMesh> meshes;
  for (int n : cfg.levels) meshes.emplace(n, generate_box(n));
  const TetMesh& finest = meshes.at(cfg.levels.back());

  std::vector<ErrorRecord> records;
  for (double nu : cfg.nus) {
    const Material material = Material::from_young_poisson(cfg.young, nu);
    const ExactSolution exact = manufactured_solution(material, cfg.variant);
    const double norm = exact_norm(finest, exact);

    const ErrorRecord* previous = nullptr;
    for (int n : cfg.levels) {
      const TetMesh& mesh = meshes.at(n);
      ErrorRecord rec;
      rec.nu = nu;
      rec.level = n;
      rec.h = mesh.h_max;
      rec.norm_exact = norm;
      try {
        const DiscreteProblem problem = build_problem(mesh, material, exact);
        rec.ndof_sigma = problem.map.num_stress;
        rec.ndof_u = problem.map.num_displacement;
        rec.ndof_eta = problem.map.num_trace;
        if (cfg.export_dir) export_level(problem, *cfg.export_dir, nu, n);
        const DiscreteSolution sol = solve_problem(problem, cfg.solver_tol);
        rec.solve = sol.report;
        rec.err = compute_errors(mesh, problem.map, sol, exact);
        rec.rel = divide(rec.err, norm);
      } catch (const Error& ex) {
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        rec.failed = true;
        rec.message = ex.what();
        rec.err = {nan, nan, nan, nan};
        rec.rel = rec.err;
      }
      if (previous != nullptr && !previous->failed && !rec.failed) {
        rec.eoc = ErrorNorms{
            eoc(previous->err.u, rec.err.u, previous->h, rec.h),
            eoc(previous->err.strain, rec.err.strain, previous->h, rec.h),
            eoc(previous->err.sigma, rec.err.sigma, previous->h, rec.h),
            eoc(previous->err.divsigma, rec.err.divsigma, previous->h, rec.h)};
      }
      records.push_back(std::move(rec));
      previous = &records.back();
      if (progress) progress(records.back());
    }
  }
  return records;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "nu",          "level",        "h",         "ndof_sigma",
      "ndof_u",      "ndof_eta",     "err_u",     "err_strain",
      "err_sigma",   "err_divsigma", "norm_exact", "rel_u",
      "rel_strain",  "rel_sigma",    "rel_divsigma", "eoc_u",
      "eoc_strain",  "eoc_sigma",    "eoc_divsigma"};
  return cols;
}

std::string format_csv(const std::vector<ErrorRecord>& records) {
  std::ostringstream out;
  const auto& cols = csv_columns();
  for (size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const ErrorRecord& r : records) {
    out << format_double(r.nu) << ',' << r.level << ',' << format_double(r.h)
        << ',' << r.ndof_sigma << ',' << r.ndof_u << ',' << r.ndof_eta;
    out << norms(r.err) << ',' << format_double(r.norm_exact) << norms(r.rel);
    if (r.eoc) {
      out << norms(*r.eoc);
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
  return out.str();
}

void emit_csv(const std::vector<ErrorRecord>& records,
              const std::filesystem::path& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << format_csv(records);
  if (!f) throw IoError("write to '" + path.string() + "' failed");
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

double to_double(const std::string& s, int line) {
  if (s.empty()) throw ParseError("empty numeric field", line);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw ParseError("bad number '" + s + "'", line);
  return v;
}

int to_int(const std::string& s, int line) {
  const double v = to_double(s, line);
  if (v != std::floor(v)) throw ParseError("bad integer '" + s + "'", line);
  return static_cast<int>(v);
}

}  // namespace

std::vector<ErrorRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  const auto& cols = csv_columns();
  if (!std::getline(in, line)) throw ParseError("missing header", 1);
  ++lineno;
  if (split(line) != cols) throw ParseError("unexpected header", lineno);

  std::vector<ErrorRecord> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    const auto f = split(line);
    if (f.size() != cols.size()) {
      throw ParseError("expected " + std::to_string(cols.size()) +
                           " fields, got " + std::to_string(f.size()),
                       lineno);
    }
    ErrorRecord r;
    r.nu = to_double(f[0], lineno);
    r.level = to_int(f[1], lineno);
    r.h = to_double(f[2], lineno);
    r.ndof_sigma = to_int(f[3], lineno);
    r.ndof_u = to_int(f[4], lineno);
    r.ndof_eta = to_int(f[5], lineno);
    r.err = {to_double(f[6], lineno), to_double(f[7], lineno),
             to_double(f[8], lineno), to_double(f[9], lineno)};
    r.norm_exact = to_double(f[10], lineno);
    r.rel = {to_double(f[11], lineno), to_double(f[12], lineno),
             to_double(f[13], lineno), to_double(f[14], lineno)};
    const bool blank = f[15].empty() && f[16].empty() && f[17].empty() &&
                       f[18].empty();
    if (!blank) {
      r.eoc = ErrorNorms{to_double(f[15], lineno), to_double(f[16], lineno),
                         to_double(f[17], lineno), to_double(f[18], lineno)};
    }
    r.failed = std::isnan(r.err.u);
    out.push_back(r);
  }
  return out;
}

}  // namespace nnelast
