#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nnelast/assembly.hpp"
#include "nnelast/dof_map.hpp"
#include "nnelast/manufactured.hpp"
#include "nnelast/mesh.hpp"
#include "nnelast/solve.hpp"

namespace nnelast {

struct StudyConfig {
  std::vector<double> nus{0.3, 0.45, 0.49, 0.4999};
  double young = 1.0;
  std::vector<int> levels{2, 4, 8, 16};
  Variant variant = Variant::Paper;
  std::filesystem::path out;
  double solver_tol = 1e-9;
  /// Write K and rhs of every solved level here when set.
  std::optional<std::filesystem::path> export_dir;

  /// Throws std::invalid_argument.
  void validate() const;
};

struct ErrorNorms {
  double u = 0;
  double strain = 0;
  double sigma = 0;
  double divsigma = 0;
};

struct ErrorRecord {
  double nu = 0;
  int level = 0;
  double h = 0;
  int ndof_sigma = 0;
  int ndof_u = 0;
  int ndof_eta = 0;
  ErrorNorms err;
  double norm_exact = 0;
  ErrorNorms rel;
  std::optional<ErrorNorms> eoc;  ///< empty on the first level

  bool failed = false;
  std::string message;
  SolveReport solve;
};

/// Discrete problem with Dirichlet data g = u on boundary vertices and load
/// f = -div sigma.
struct DiscreteProblem {
  GlobalDofMap map;
  TraceField dirichlet;
  SaddleSystem system;
};

DiscreteProblem build_problem(const TetMesh& mesh, const Material& material,
                              const ExactSolution& exact);

struct DiscreteSolution {
  Eigen::VectorXd x;
  TraceField trace;  ///< prescribed plus solved vertex values
  SolveReport report;
};

DiscreteSolution solve_problem(const DiscreteProblem& problem,
                               double tolerance = 1e-9);

/// All four error norms with the 14-point rule on every element.
ErrorNorms compute_errors(const TetMesh& mesh, const GlobalDofMap& map,
                          const DiscreteSolution& solution,
                          const ExactSolution& exact);

/// (|u|_1^2 + |u|^2 + |sigma|^2 + |div sigma|^2)^(1/2).
double exact_norm(const TetMesh& mesh, const ExactSolution& exact);

/// log(e_coarse / e_fine) / log(h_coarse / h_fine)
double eoc(double e_coarse, double e_fine, double h_coarse, double h_fine);

using ProgressFn = std::function<void(const ErrorRecord&)>;

/// Records ordered by nu, then level. A level whose solve throws is marked
/// failed and the sweep continues.
std::vector<ErrorRecord> run_convergence(const StudyConfig& cfg,
                                         const ProgressFn& progress = {});

/// Column names in output order.
const std::vector<std::string>& csv_columns();
std::string format_csv(const std::vector<ErrorRecord>& records);
/// Throws IoError naming the path.
void emit_csv(const std::vector<ErrorRecord>& records,
              const std::filesystem::path& path);
/// Inverse of format_csv for the numeric columns. Throws ParseError.
std::vector<ErrorRecord> parse_csv(const std::string& text);

}  // namespace nnelast
