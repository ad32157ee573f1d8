#include "nnelast/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "nnelast/affine_map.hpp"
#include "nnelast/element.hpp"
#include "nnelast/errors.hpp"
#include "nnelast/interpolation.hpp"
#include "nnelast/poly_field.hpp"
#include "nnelast/quadrature.hpp"
#include "nnelast/study.hpp"

namespace nnelast {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

bool report(std::ostream& out, const std::string& what, double value,
            double limit) {
  const bool ok = value <= limit;
  out << "  " << what << ": " << fmt(value) << " (limit " << fmt(limit)
      << ") " << (ok ? "ok" : "FAIL") << '\n';
  return ok;
}

bool unisolvence(std::ostream& out) {
  const ReducedSystem rs = reduced_matrix_12(geometry(Tet::reference()));
  const double expected = 2025.0 / 256.0;
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "  reference determinant %.15g, expected 2025/256 = %.15g\n",
                rs.determinant, expected);
  out << buf;
  bool ok = report(out, "relative deviation",
                   std::abs(rs.determinant - expected) / expected, 1e-10);

  std::mt19937_64 rng(20250101);
  int singular = 0;
  for (int i = 0; i < 100; ++i) {
    const TetGeometry g = geometry(random_tet(rng));
    try {
      nodal_basis(g);
    } catch (const SingularDofMatrix&) {
      ++singular;
    }
  }
  out << "  random tets with singular DOF matrix: " << singular << " of 100\n";
  return ok && singular == 0;
}

// (div tau, v)_T for affine div tau and affine v given by vertex values.
double affine_product(double volume, const VertexVectors& a,
                      const VertexVectors& b) {
  const Eigen::RowVector3d sa = a.colwise().sum();
  const Eigen::RowVector3d sb = b.colwise().sum();
  return volume / 20.0 * ((a.array() * b.array()).sum() + sa.dot(sb));
}

bool transform(std::ostream& out) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const Tet ref = Tet::reference();
  const TetGeometry gr = geometry(ref);
  const SpanningSet span_ref = spanning_basis(gr, build_nn_tensors(gr));

  double face = 0, volume = 0, div = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Tet phys = random_tet(rng);
    const TetGeometry g = geometry(phys);
    const AffineMap m = map_from_tets(ref, phys);

    TensorPoly tau_hat;
    for (const TensorPoly& s : span_ref) tau_hat += coef(rng) * s;
    const TensorPoly tau = push_stress(m, tau_hat);

    const DofVector d_hat = evaluate_dofs(gr, tau_hat);
    const DofVector d = evaluate_dofs(g, tau);
    const double scale = d_hat.cwiseAbs().maxCoeff();
    face = std::max(face, (d - d_hat).head<kFaceDofs>().cwiseAbs().maxCoeff() /
                              scale);

    SymTensor c_hat;
    for (int k = 0; k < SymTensor::kSize; ++k) c_hat[k] = coef(rng);
    const SymTensor c = push_constant_dual(m, c_hat);
    const double vol_hat = gr.volume * frobenius(tau_hat.mean(), c_hat);
    const double vol = g.volume * frobenius(tau.mean(), c);
    volume = std::max(volume, std::abs(vol - vol_hat) / scale);

    VertexVectors v_hat;
    for (int i = 0; i < v_hat.size(); ++i) v_hat.data()[i] = coef(rng);
    const VertexVectors v = push_vector_dual(m, v_hat);
    const double dv_hat =
        affine_product(gr.volume, tau_hat.divergence(gr.grad), v_hat);
    const double dv = affine_product(g.volume, tau.divergence(g.grad), v);
    div = std::max(div, std::abs(dv - dv_hat) / scale);
  }
  bool ok = report(out, "face moments", face, 1e-10);
  ok = report(out, "volume moments", volume, 1e-10) && ok;
  ok = report(out, "divergence moments", div, 1e-10) && ok;
  return ok;
}

bool commuting(std::ostream& out) {
  const TetMesh mesh = generate_box(2);
  const GlobalDofMap map = build_dof_map(mesh);
  std::mt19937_64 rng(11);
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const PolyTensorField f = random_poly_field(rng, 1 + trial % 4);
    worst = std::max(worst, check_commuting(f.field(), mesh, map));
  }
  return report(out, "max |div I tau - P1 div tau|", worst, 1e-9);
}

bool patch(std::ostream& out) {
  const TetMesh mesh = generate_box(2);
  const Material mat = Material::from_young_poisson(1.0, 0.3);
  Mat3 g;
  g << 0.3, -0.2, 0.5, 0.1, 0.7, -0.4, 0.6, 0.2, -0.1;
  const ExactSolution exact = affine_solution(Vec3(0.1, -0.3, 0.2), g, mat);
  const DiscreteProblem problem = build_problem(mesh, mat, exact);
  const DiscreteSolution sol = solve_problem(problem, 1e-12);
  const ErrorNorms err = compute_errors(mesh, problem.map, sol, exact);
  const double norm = exact_norm(mesh, exact);
  bool ok = report(out, "relative error u", err.u / norm, 1e-8);
  ok = report(out, "relative error strain", err.strain / norm, 1e-8) && ok;
  ok = report(out, "relative error sigma", err.sigma / norm, 1e-8) && ok;
  ok = report(out, "relative error div sigma", err.divsigma / norm, 1e-8) && ok;
  return ok;
}

bool quadrature(std::ostream& out) {
  bool ok = true;
  for (QuadKind kind : {QuadKind::Deg2Point4, QuadKind::Deg5Point14}) {
    const QuadratureRule& q = quad_rule(kind);
    double worst = 0;
    for (int a = 0; a <= q.degree; ++a) {
      for (int b = 0; a + b <= q.degree; ++b) {
        for (int c = 0; a + b + c <= q.degree; ++c) {
          for (int d = 0; a + b + c + d <= q.degree; ++d) {
            double s = 0;
            for (size_t p = 0; p < q.points.size(); ++p) {
              const auto& l = q.points[p];
              s += q.weights[p] * std::pow(l[0], a) * std::pow(l[1], b) *
                   std::pow(l[2], c) * std::pow(l[3], d);
            }
            const double exact = exact_simplex_integral({a, b, c, d});
            worst = std::max(worst, std::abs(s - exact) / exact);
          }
        }
      }
    }
    ok = report(out,
                std::to_string(q.points.size()) + "-point rule, degree " +
                    std::to_string(q.degree),
                worst, 1e-12) &&
         ok;
  }
  const FaceQuadratureRule& f = face_rule_deg5();
  double worst = 0;
  for (int a = 0; a <= f.degree; ++a) {
    for (int b = 0; a + b <= f.degree; ++b) {
      for (int c = 0; a + b + c <= f.degree; ++c) {
        double s = 0;
        for (size_t p = 0; p < f.points.size(); ++p) {
          const auto& m = f.points[p];
          s += f.weights[p] * std::pow(m[0], a) * std::pow(m[1], b) *
               std::pow(m[2], c);
        }
        const double exact = exact_face_integral({a, b, c});
        worst = std::max(worst, std::abs(s - exact) / exact);
      }
    }
  }
  return report(out, "7-point face rule, degree 5", worst, 1e-12) && ok;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = {
      "unisolvence", "transform", "commuting", "patch", "quadrature"};
  return names;
}

bool verify(const std::string& suite, std::ostream& out) {
  bool ok = false;
  out << suite << '\n';
  if (suite == "unisolvence") {
    ok = unisolvence(out);
  } else if (suite == "transform") {
    ok = transform(out);
  } else if (suite == "commuting") {
    ok = commuting(out);
  } else if (suite == "patch") {
    ok = patch(out);
  } else if (suite == "quadrature") {
    ok = quadrature(out);
  } else {
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  }
  out << (ok ? "PASS" : "FAIL") << '\n';
  return ok;
}

}  // namespace nnelast
