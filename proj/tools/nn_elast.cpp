// Command-line driver: convergence study, self-checks and mesh statistics.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nnelast/dof_map.hpp"
#include "nnelast/errors.hpp"
#include "nnelast/mesh.hpp"
#include "nnelast/study.hpp"
#include "nnelast/verify.hpp"

namespace {

using namespace nnelast;

void print_progress(const ErrorRecord& r) {
  if (r.failed) {
    std::fprintf(stderr, "nu=%-7g n=%-3d FAILED: %s\n", r.nu, r.level,
                 r.message.c_str());
    return;
  }
  std::fprintf(stderr,
               "nu=%-7g n=%-3d dofs=%d/%d/%d  rel u=%.3e strain=%.3e "
               "sigma=%.3e div=%.3e  solve %.1fs (reduced %lld)\n",
               r.nu, r.level, r.ndof_sigma, r.ndof_u, r.ndof_eta, r.rel.u,
               r.rel.strain, r.rel.sigma, r.rel.divsigma, r.solve.seconds,
               static_cast<long long>(r.solve.reduced_size));
  if (r.eoc) {
    std::fprintf(stderr, "                eoc u=%.3f strain=%.3f sigma=%.3f div=%.3f\n",
                 r.eoc->u, r.eoc->strain, r.eoc->sigma, r.eoc->divsigma);
  }
}

int run_study(StudyConfig cfg, const std::vector<double>& nus,
              const std::string& variant, const std::string& export_dir) {
  if (!nus.empty()) cfg.nus = nus;
  cfg.variant = parse_variant(variant);
  if (!export_dir.empty()) cfg.export_dir = export_dir;
  const auto records = run_convergence(cfg, print_progress);
  emit_csv(records, cfg.out);
  std::fprintf(stderr, "wrote %zu records to %s\n", records.size(),
               cfg.out.string().c_str());
  for (const auto& r : records) {
    if (r.failed) return 1;
  }
  return 0;
}

int run_mesh_info(int n, const std::string& input) {
  TetMesh mesh;
  if (!input.empty()) {
    ImportedMesh im = import_ascii(input);
    for (const auto& w : im.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    mesh = std::move(im.mesh);
  } else {
    mesh = generate_box(n);
  }
  const MeshQualityReport q = quality(mesh);
  const GlobalDofMap map = build_dof_map(mesh);
  std::printf("vertices          %d\n", q.num_vertices);
  std::printf("tets              %d\n", q.num_tets);
  std::printf("faces             %d (interior %d, boundary %d)\n", q.num_faces,
              q.num_interior_faces, q.num_boundary_faces);
  std::printf("boundary vertices %d\n", q.num_boundary_vertices);
  std::printf("h min / max       %.17g / %.17g\n", q.h_min, q.h_max);
  std::printf("max shape ratio   %.17g\n", q.max_shape_ratio);
  std::printf("dofs sigma/u/eta  %d / %d / %d (total %d)\n", map.num_stress,
              map.num_displacement, map.num_trace, map.total);
  std::printf("topology hash     %016llx\n",
              static_cast<unsigned long long>(topology_hash(mesh)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal-normal continuous mixed finite elements for 3D elasticity"};
  app.require_subcommand(1);

  StudyConfig cfg;
  std::vector<double> nus;
  std::string variant = "paper";
  std::string export_dir;
  auto* study = app.add_subcommand("study", "Manufactured-solution convergence study");
  study->add_option("--nu", nus, "Poisson ratio (repeatable or comma-separated)")
      ->delimiter(',');
  study->add_option("--young", cfg.young, "Young's modulus")->capture_default_str();
  study->add_option("--levels", cfg.levels, "Cubes per side, increasing")
      ->delimiter(',')
      ->capture_default_str();
  study->add_option("--variant", variant, "Manufactured solution")
      ->check(CLI::IsMember({"paper", "symmetrized"}))
      ->capture_default_str();
  study->add_option("--out", cfg.out, "CSV output path")->required();
  study->add_option("--export-matrix", export_dir,
                    "Directory for K and rhs in coordinate format");
  study->add_option("--solver-tol", cfg.solver_tol, "Relative residual tolerance")
      ->capture_default_str();

  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "Run a built-in self-check");
  verify_cmd->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(nnelast::verify_suites()));

  int n = 2;
  std::string mesh_in;
  auto* info = app.add_subcommand("mesh-info", "Mesh statistics and DOF counts");
  info->add_option("--n", n, "Cubes per side of the unit-cube mesh")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  info->add_option("--in", mesh_in, "Read a tetmesh ASCII file instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*study) return run_study(cfg, nus, variant, export_dir);
    if (*verify_cmd) return nnelast::verify(suite, std::cout) ? 0 : 1;
    if (*info) return run_mesh_info(n, mesh_in);
  } catch (const nnelast::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
