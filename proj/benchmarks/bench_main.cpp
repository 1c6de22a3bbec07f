#include <benchmark/benchmark.h>

#include <random>

#include "qalex/cocycle.hpp"
#include "qalex/io.hpp"
#include "qalex/twisted.hpp"

using namespace qalex;

namespace {

std::string data(const char* name) { return std::string(QALEX_DATA_DIR) + "/" + name; }

RingMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  const auto g = AbelianGroup::cyclic(4);
  std::mt19937_64 rng(seed);
  RingMatrix m(g, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      GroupRingElem e(g);
      for (int k = 0; k < 2; ++k)
        e += GroupRingElem::monomial(g, cyclic_element(g, static_cast<std::int64_t>(rng() % 4)),
                                     static_cast<std::int64_t>(rng() % 5) - 2);
      m.set(r, c, e);
    }
  return m;
}

void BM_DetCofactor(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(det_cofactor(m));
}
BENCHMARK(BM_DetCofactor)->DenseRange(4, 8, 1)->Arg(12);

void BM_DetBerkowitz(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(det_berkowitz(m));
}
BENCHMARK(BM_DetBerkowitz)->DenseRange(4, 8, 1)->Arg(12)->Arg(16);

void BM_GrannyColorings(benchmark::State& state) {
  const auto d = parse_pd(read_file(data("granny.pd")));
  const auto q = s4_four_cycle_quandle();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_colorings(d, q, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_GrannyColorings)->Arg(1)->Arg(4);

void BM_CocycleSpace(benchmark::State& state) {
  const auto q = s4_four_cycle_quandle();
  for (auto _ : state) benchmark::DoNotOptimize(search_cocycles(q, 4));
}
BENCHMARK(BM_CocycleSpace);

void BM_FilteredCocycleSearch(benchmark::State& state) {
  const auto q = s4_four_cycle_quandle();
  const auto a = AbelianGroup::cyclic(4);
  const auto d = parse_pd(read_file(data("trefoil.pd")));
  const auto space = search_cocycles(q, 4);
  const auto filter = parse_invariant_multiset(a, "(1) x 6; (u) x 24");
  for (auto _ : state) benchmark::DoNotOptimize(find_cocycle(q, space, a, &d, &filter, 1000000));
}
BENCHMARK(BM_FilteredCocycleSearch);

void BM_TheoremCheckSquare(benchmark::State& state) {
  const auto f = parse_cocycle_file(read_file(data("theta_z4.coc")));
  const auto theta = Cocycle::from_exponents(FiniteQuandle(*f.quandle), f.group, f.exponents);
  const auto d = parse_pd(read_file(data("square.pd")));
  const auto colorings = enumerate_colorings(d, theta.quandle);
  for (auto _ : state)
    for (const auto& c : colorings) benchmark::DoNotOptimize(verify_theorem(d, theta, c));
}
BENCHMARK(BM_TheoremCheckSquare)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
