#include <benchmark/benchmark.h>

#include "affinemc/motion_search.hpp"
#include "affinemc/synth.hpp"
#include "../tests/support/textures.hpp"

using namespace affinemc;

namespace {

void BM_AffineMe(benchmark::State& state) {
  const FilterBank bank = make_filter_bank();
  const int size = static_cast<int>(state.range(0));
  const Frame base = testsupport::textured_frame(192, 192, 7);
  const Frame cur = synth_affine_pair(base, {0.02, 1.02, 0.0, 0.0});
  SearchConfig cfg;
  AffineModel start;
  start.mv_tl = start.mv_tr = {0, 0, MvPrec::QuarterPel};
  start.width = size;
  for (auto _ : state) {
    benchmark::DoNotOptimize(affine_me(cur.y, base.y, 64, 64, size, start, bank, cfg));
  }
}

void BM_TranslationalSearch(benchmark::State& state) {
  const FilterBank bank = make_filter_bank();
  const Frame base = testsupport::textured_frame(192, 192, 9);
  const Frame cur = synth_affine_pair(base, {0.0, 1.0, 4.0, -3.0});
  SearchConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(translational_search(
        cur.y, base.y, 64, 64, static_cast<int>(state.range(0)),
        {0, 0, MvPrec::QuarterPel}, bank, cfg));
  }
}

}  // namespace

BENCHMARK(BM_AffineMe)->Arg(16)->Arg(32);
BENCHMARK(BM_TranslationalSearch)->Arg(16)->Arg(64);
