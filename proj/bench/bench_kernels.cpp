// Serial against parallel runs of the verification and search kernels.
#include <benchmark/benchmark.h>

#include "ewt/assembly.hpp"
#include "ewt/combinators.hpp"
#include "ewt/ext_weihrauch.hpp"
#include "ewt/laws.hpp"
#include "ewt/random.hpp"

using namespace ewt;

namespace {

Context context(benchmark::State& state) {
  Context c;
  c.exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  return c;
}

// A predicate with many supported points, checked against itself.
void BM_LeqExtW(benchmark::State& state) {
  Context ctx = context(state);
  Gen gen(7);
  Asm x = gen.assembly(60, "x", 60);
  EWPredicate f = gen.ew_predicate(x, 400, 3, 3);
  EWWitness w = extW_refl();
  for (auto _ : state) benchmark::DoNotOptimize(leq_extW(ctx, f, f, w));
}

// Pool scan for a realizer that only the last candidates satisfy.
void BM_SearchRealizer(benchmark::State& state) {
  Context ctx = context(state);
  Asm x = make_assembly({{"a", Term::k()}, {"b", Term::s()}, {"c", comb_false()}});
  Asm y = make_assembly({{"u", pair_of(Term::s(), Term::k())}, {"v", pair_of(Term::k(), Term::k())},
                         {"w", comb_I()}});
  std::vector<Term> pool = standard_pool(7);
  std::vector<std::size_t> map{1, 0, 2};
  for (auto _ : state) benchmark::DoNotOptimize(search_realizer(ctx, x, y, map, pool));
}

void BM_HeytingSuite(benchmark::State& state) {
  LawOptions opt;
  opt.exec = state.range(0) ? Exec::Parallel : Exec::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("heyting", opt));
}

}  // namespace

BENCHMARK(BM_LeqExtW)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchRealizer)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HeytingSuite)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
