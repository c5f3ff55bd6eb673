#include "cayley/borel.hpp"
#include "cayley/bundles.hpp"
#include "cayley/chow_ring.hpp"
#include "cayley/jordan.hpp"
#include "cayley/lattice.hpp"
#include "cayley/minuscule.hpp"

#include <benchmark/benchmark.h>

using namespace cayley;

namespace {

const WeightDiagram& diagram() {
  static const WeightDiagram d = cayley_plane_diagram();
  return d;
}

const StructureTable& table() {
  static const StructureTable t = solve_structure_constants(diagram());
  return t;
}

const BorelEngine& engine() {
  static const BorelEngine e(table());
  return e;
}

void BM_Diagram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cayley_plane_diagram());
}
BENCHMARK(BM_Diagram)->Unit(benchmark::kMicrosecond);

void BM_SolveStructureConstants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_structure_constants(diagram()));
}
BENCHMARK(BM_SolveStructureConstants)->Unit(benchmark::kMillisecond);

void BM_CoefficientFunctionals(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(CoefficientFunctionals(diagram(), 1));
}
BENCHMARK(BM_CoefficientFunctionals)->Unit(benchmark::kMillisecond);

void BM_BorelEngine(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(BorelEngine(table()));
}
BENCHMARK(BM_BorelEngine)->Unit(benchmark::kMillisecond);

// ∂ along a reduced word of the class of codimension `range(0)`, applied to
// ω6^k: the literal route in ε-coordinates against the closed form in
// fundamental coordinates.
struct WordCase {
  std::vector<int> word;
  Poly eps, fund;
};

WordCase word_case(int length) {
  const auto& d = diagram();
  NodeId w = d.level(length).front();
  Poly f = linear_form(build_e6().fundamental_weight(6)).pow(length);
  return {d.reduced_word(w), f, to_fundamental(f)};
}

void BM_DividedDiffLiteral(benchmark::State& state) {
  WordCase c = word_case(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(divided_diff_word(c.word, c.eps));
}
BENCHMARK(BM_DividedDiffLiteral)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_DividedDiffFundamental(benchmark::State& state) {
  WordCase c = word_case(static_cast<int>(state.range(0)));
  if (to_fundamental(divided_diff_word(c.word, c.eps)) != [&] {
        Poly g = c.fund;
        for (auto it = c.word.rbegin(); it != c.word.rend(); ++it) g = divided_diff_fundamental(*it, g);
        return g;
      }()) {
    state.SkipWithError("routes disagree");
    return;
  }
  for (auto _ : state) {
    Poly g = c.fund;
    for (auto it = c.word.rbegin(); it != c.word.rend(); ++it) g = divided_diff_fundamental(*it, g);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_DividedDiffFundamental)->Arg(4)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_MultiplySolverTable(benchmark::State& state) {
  const auto& t = table();
  NodeId u = *diagram().find_name("s4p"), v = *diagram().find_name("s8pp");
  for (auto _ : state) benchmark::DoNotOptimize(t.product(u, v));
}
BENCHMARK(BM_MultiplySolverTable);

void BM_MultiplyBorel(benchmark::State& state) {
  const auto& e = engine();
  NodeId u = *diagram().find_name("s4p"), v = *diagram().find_name("s8pp");
  for (auto _ : state) benchmark::DoNotOptimize(e.multiply_direct(u, v));
}
BENCHMARK(BM_MultiplyBorel)->Unit(benchmark::kMicrosecond);

void BM_SegreAndDegY8(benchmark::State& state) {
  ChernVector c = chern_projected(chern_normal(diagram()), diagram());
  const auto& e = engine();
  for (auto _ : state) benchmark::DoNotOptimize(degree_y8(segre_classes(c, e), diagram()));
}
BENCHMARK(BM_SegreAndDegY8)->Unit(benchmark::kMillisecond);

void BM_OctonionProduct(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Octonion a = random_octonion(rng), b = random_octonion(rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_OctonionProduct);

void BM_RankOneCell(benchmark::State& state) {
  std::mt19937_64 rng(2);
  OctMatrix3 x = cell_point(2, random_octonion(rng), random_octonion(rng));
  for (auto _ : state) benchmark::DoNotOptimize(rank_one_check(x));
}
BENCHMARK(BM_RankOneCell)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
