#include <benchmark/benchmark.h>

#include <random>

#include "coxdiag/complexes.hpp"
#include "coxdiag/coxeter.hpp"
#include "coxdiag/cw_complex.hpp"
#include "coxdiag/finite_group.hpp"
#include "coxdiag/parabolic.hpp"
#include "coxdiag/rewrite.hpp"
#include "coxdiag/search.hpp"
#include "coxdiag/zamolodzhikov.hpp"

using namespace coxdiag;

namespace {

CoxeterSystem system_for(int which) {
  switch (which) {
    case 0: return make_a(3);
    case 1: return make_b(3);
    default: return make_h3();
  }
}

const char* name_for(int which) { return which == 0 ? "A3" : which == 1 ? "B3" : "H3"; }

void BM_Enumerate(benchmark::State& state) {
  const auto sys = system_for(static_cast<int>(state.range(0)));
  state.SetLabel(name_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(sys, sys.all()));
}
BENCHMARK(BM_Enumerate)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_NormalFormLongWord(benchmark::State& state) {
  const auto sys = make_h3();
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> gen(0, 2);
  Word w;
  for (int i = 0; i < state.range(0); ++i) w.push_back(static_cast<Generator>(gen(rng)));
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(sys, w));
}
BENCHMARK(BM_NormalFormLongWord)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_FiniteGroupTable(benchmark::State& state) {
  const auto sys = system_for(static_cast<int>(state.range(0)));
  state.SetLabel(name_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(FiniteGroup(sys).size());
}
BENCHMARK(BM_FiniteGroupTable)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_DualComplexHomology(benchmark::State& state) {
  const auto sys = system_for(static_cast<int>(state.range(0)));
  state.SetLabel(name_for(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    const auto c = dual_coxeter_complex(sys, true);
    benchmark::DoNotOptimize(homology_mod2(c));
  }
}
BENCHMARK(BM_DualComplexHomology)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SalvettiHomology(benchmark::State& state) {
  const auto sys = system_for(static_cast<int>(state.range(0)));
  state.SetLabel(name_for(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    const auto c = salvetti_complex(sys);
    benchmark::DoNotOptimize(homology_mod2(c));
  }
}
BENCHMARK(BM_SalvettiHomology)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ZamolodzhikovGenerate(benchmark::State& state) {
  const auto sys = system_for(static_cast<int>(state.range(0)));
  state.SetLabel(name_for(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(generate_zamolodzhikov(sys, sys.all()));
}
BENCHMARK(BM_ZamolodzhikovGenerate)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_RuleCatalog(benchmark::State& state) {
  const auto sys = make_h3();
  for (auto _ : state) {
    RuleCatalog catalog(sys, Mode::Oriented);
    install_all_zamolodzhikov(catalog);
    benchmark::DoNotOptimize(catalog.rules().size());
  }
}
BENCHMARK(BM_RuleCatalog)->Unit(benchmark::kMillisecond);

// Hiding a braid-vertex pair inside a longer A3 diagram and proving it away.
void BM_SearchCancelPair(benchmark::State& state) {
  const auto sys = make_a(3);
  RuleCatalog catalog(sys, Mode::Oriented);
  const StrandWord word = alternating(0, 1, 3, Sign::Plus);
  StrandWord domain = word;
  domain.push_back({2, Sign::Plus});
  std::vector<Slice> slices;
  for (int k = 0; k < state.range(0); ++k) {
    slices.push_back({0, Symbol::vertex(0, 1, 3, Direction::Forward)});
    slices.push_back({3, Symbol::cup(2, Variant::MinusPlus)});
    slices.push_back({3, Symbol::cap(2, Variant::MinusPlus)});
    slices.push_back({0, Symbol::vertex(0, 1, 3, Direction::Backward)});
  }
  const Diagram busy(ObjectWord{Mode::Oriented, domain}, slices);
  const Diagram plain = Diagram::identity(ObjectWord{Mode::Oriented, domain});
  for (auto _ : state) {
    const auto r = search_equality(catalog, busy, plain);
    if (r.status != SearchStatus::Proven) state.SkipWithError("search did not prove equality");
    benchmark::DoNotOptimize(r.nodes);
  }
}
BENCHMARK(BM_SearchCancelPair)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto sys = make_a(3);
  std::vector<Slice> slices;
  StrandWord domain;
  for (int k = 0; k < state.range(0); ++k) {
    domain.push_back({static_cast<Generator>(k % 3), Sign::None});
    slices.push_back({static_cast<std::size_t>(k), Symbol::cup(static_cast<Generator>(k % 3))});
  }
  const Diagram d(ObjectWord{Mode::Unoriented, domain}, slices);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalForm)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
