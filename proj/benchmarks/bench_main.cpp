#include <benchmark/benchmark.h>

#include <random>

#include "nnelast/assembly.hpp"
#include "nnelast/element.hpp"
#include "nnelast/manufactured.hpp"
#include "nnelast/mesh.hpp"
#include "nnelast/poly_field.hpp"
#include "nnelast/solve.hpp"
#include "nnelast/study.hpp"

using namespace nnelast;

static void BM_NodalBasis(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const TetGeometry g = geometry(random_tet(rng));
  for (auto _ : state) benchmark::DoNotOptimize(nodal_basis(g));
}
BENCHMARK(BM_NodalBasis);

static void BM_ElementMatrices(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const StressShapeSet shapes = nodal_basis(geometry(random_tet(rng)));
  const Material m = Material::from_young_poisson(1.0, 0.3);
  const VectorField load = [&](const Vec3& x) {
    return manufactured_f(x, m, Variant::Paper);
  };
  for (auto _ : state) benchmark::DoNotOptimize(element_matrices(shapes, m, load));
}
BENCHMARK(BM_ElementMatrices);

static void BM_Assemble(benchmark::State& state) {
  const TetMesh mesh = generate_box(static_cast<int>(state.range(0)));
  const GlobalDofMap map = build_dof_map(mesh);
  const Material m = Material::from_young_poisson(1.0, 0.3);
  const ExactSolution ex = manufactured_solution(m, Variant::Paper);
  for (auto _ : state) benchmark::DoNotOptimize(build_problem(mesh, m, ex));
  state.SetItemsProcessed(state.iterations() * mesh.num_tets());
}
BENCHMARK(BM_Assemble)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Solve(benchmark::State& state) {
  const TetMesh mesh = generate_box(static_cast<int>(state.range(0)));
  const Material m = Material::from_young_poisson(1.0, 0.4999);
  const DiscreteProblem problem =
      build_problem(mesh, m, manufactured_solution(m, Variant::Paper));
  for (auto _ : state) benchmark::DoNotOptimize(solve_problem(problem, 1e-9));
  state.counters["dofs"] = problem.system.size();
}
BENCHMARK(BM_Solve)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
