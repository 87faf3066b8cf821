#include <benchmark/benchmark.h>

#include <random>

#include "affinemc/filter_bank.hpp"
#include "affinemc/motion_comp.hpp"

using namespace affinemc;

namespace {

Frame make_ref(int dim) {
  Frame f(dim, dim);
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(0, 255);
  for (int y = 0; y < dim; ++y) {
    for (int x = 0; x < dim; ++x) {
      f.y.at(x, y) = static_cast<std::uint8_t>(d(rng));
    }
  }
  for (int y = 0; y < dim / 2; ++y) {
    for (int x = 0; x < dim / 2; ++x) {
      f.cb.at(x, y) = static_cast<std::uint8_t>(d(rng));
      f.cr.at(x, y) = static_cast<std::uint8_t>(d(rng));
    }
  }
  f.pad();
  return f;
}

AffineModel zoom_model(int size) {
  AffineModel m;
  m.mv_tl = {0, 0, MvPrec::QuarterPel};
  m.mv_tr = {static_cast<std::int32_t>(size / 4), 0, MvPrec::QuarterPel};
  m.width = size;
  return m;
}

void BM_InterpolateUnitHalfPel(benchmark::State& state) {
  const FilterBank bank = make_filter_bank();
  const Frame ref = make_ref(128);
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    benchmark::DoNotOptimize(interpolate_unit(
        ref.y, {32, 32, dim, dim, {32, 32, MvPrec::SixtyFourthPel}}, bank, 8, count));
  }
  state.SetItemsProcessed(state.iterations() * dim * dim);
}

void BM_AffineMcBlockBased(benchmark::State& state) {
  const FilterBank bank = make_filter_bank();
  const Frame ref = make_ref(128);
  const int size = static_cast<int>(state.range(0));
  const AffineModel m = zoom_model(size);
  for (auto _ : state) {
    McTelemetry t;
    benchmark::DoNotOptimize(motion_compensate_affine(ref, 32, 32, size, m, bank, t));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}

void BM_AffineMcPixelBased(benchmark::State& state) {
  const FilterBank bank = make_filter_bank();
  const Frame ref = make_ref(128);
  const int size = static_cast<int>(state.range(0));
  const AffineModel m = zoom_model(size);
  McOptions opts;
  opts.pixel_based = true;
  for (auto _ : state) {
    McTelemetry t;
    benchmark::DoNotOptimize(motion_compensate_affine(ref, 32, 32, size, m, bank, t, opts));
  }
  state.SetItemsProcessed(state.iterations() * size * size);
}

}  // namespace

BENCHMARK(BM_InterpolateUnitHalfPel)->Arg(4)->Arg(16)->Arg(64);
BENCHMARK(BM_AffineMcBlockBased)->Arg(16)->Arg(64);
BENCHMARK(BM_AffineMcPixelBased)->Arg(16)->Arg(64);
