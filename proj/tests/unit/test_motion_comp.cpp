#include <doctest.h>

#include <random>

#include "affinemc/metrics.hpp"
#include "affinemc/motion_comp.hpp"
#include "../support/textures.hpp"

using namespace affinemc;

namespace {

const FilterBank& bank() {
  static const FilterBank b = make_filter_bank();
  return b;
}

AffineModel translation(std::int32_t h, std::int32_t v, int width, int x = 0, int y = 0) {
  AffineModel m;
  m.mv_tl = m.mv_tr = {h, v, MvPrec::QuarterPel};
  m.width = width;
  m.org_x = x;
  m.org_y = y;
  return m;
}

}  // namespace

TEST_CASE("interpolation counts") {
  const Plane ref = testsupport::textured_plane(32, 32, 1);

  SUBCASE("4x4 unit at half-pel costs 44 + 16") {
    std::uint64_t count = 0;
    interpolate_unit(ref, {8, 8, 4, 4, {32, 32, MvPrec::SixtyFourthPel}}, bank(), 8, count);
    CHECK(count == 60);
  }
  SUBCASE("integer MV is a free copy") {
    std::uint64_t count = 0;
    const PelBlock p =
        interpolate_unit(ref, {8, 8, 4, 4, {64, -128, MvPrec::SixtyFourthPel}}, bank(), 8,
                         count);
    CHECK(count == 0);
    for (int y = 0; y < 4; ++y) {
      for (int x = 0; x < 4; ++x) {
        CHECK(p.at(x, y) == ref.at(8 + x + 1, 8 + y - 2));
      }
    }
  }
  SUBCASE("1x1 unit at half-pel costs 9") {
    std::uint64_t count = 0;
    interpolate_unit(ref, {8, 8, 1, 1, {32, 32, MvPrec::SixtyFourthPel}}, bank(), 8, count);
    CHECK(count == 9);
  }
  SUBCASE("single-axis phases") {
    std::uint64_t count = 0;
    interpolate_unit(ref, {8, 8, 4, 4, {32, 0, MvPrec::SixtyFourthPel}}, bank(), 8, count);
    CHECK(count == 16);  // horizontal only, H*W
    count = 0;
    interpolate_unit(ref, {8, 8, 4, 4, {0, 32, MvPrec::SixtyFourthPel}}, bank(), 8, count);
    CHECK(count == 16);  // vertical only
  }
  SUBCASE("count model for generic sizes") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> dim(1, 8);
    std::uniform_int_distribution<int> phase(1, 63);
    for (int t = 0; t < 20; ++t) {
      const int w = dim(rng);
      const int h = dim(rng);
      std::uint64_t count = 0;
      interpolate_unit(ref, {8, 8, w, h, {phase(rng), phase(rng), MvPrec::SixtyFourthPel}},
                       bank(), 8, count);
      CHECK(count == static_cast<std::uint64_t>(h + 8 - 1) * w + std::uint64_t(h) * w);
    }
  }
}

TEST_CASE("DC preservation at every phase") {
  const Plane flat = testsupport::constant_plane(16, 16, 137);
  for (int ph = 0; ph < 64; ++ph) {
    std::uint64_t count = 0;
    const PelBlock p =
        interpolate_unit(flat, {4, 4, 4, 4, {ph, ph, MvPrec::SixtyFourthPel}}, bank(), 8,
                         count);
    for (int y = 0; y < 4; ++y) {
      for (int x = 0; x < 4; ++x) {
        CHECK(p.at(x, y) == 137);
      }
    }
  }
}

TEST_CASE("mirror symmetry of interpolation") {
  const Plane ref = testsupport::textured_plane(32, 16, 9);
  Plane mirrored(32, 16);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 32; ++x) {
      mirrored.at(x, y) = ref.at(31 - x, y);
    }
  }
  mirrored.pad();

  for (int ph : {5, 16, 32, 49}) {
    std::uint64_t count = 0;
    // Forward: 8 columns starting at x=12 with phase ph.
    const PelBlock a =
        interpolate_unit(ref, {12, 4, 8, 4, {ph, 0, MvPrec::SixtyFourthPel}}, bank(), 8,
                         count);
    // Mirrored plane: the same samples run right-to-left; the span between
    // column 31-x and its right neighbor is phase 64-ph from column 31-x-1.
    const PelBlock b = interpolate_unit(
        mirrored, {31 - (12 + 7) - 1, 4, 8, 4, {64 - ph, 0, MvPrec::SixtyFourthPel}},
        bank(), 8, count);
    for (int y = 0; y < 4; ++y) {
      for (int x = 0; x < 8; ++x) {
        CHECK(a.at(x, y) == b.at(7 - x, y));
      }
    }
  }
}

TEST_CASE("mc_unit_size") {
  SUBCASE("translation keeps one unit") {
    int w = 0;
    int h = 0;
    mc_unit_size(16, 16, translation(12, -20, 16), w, h);
    CHECK(w == 16);
    CHECK(h == 16);
  }
  SUBCASE("quarter-pel spread on 16 gives 8") {
    AffineModel m = translation(0, 0, 16);
    m.mv_tr = {1, 0, MvPrec::QuarterPel};  // MVD 0.25 px
    int w = 0;
    int h = 0;
    mc_unit_size(16, 16, m, w, h);
    CHECK(w == 8);
    CHECK(h == 8);
  }
  SUBCASE("large spread clamps to the minimum of 4") {
    AffineModel m = translation(0, 0, 16);
    m.mv_tr = {15, 0, MvPrec::QuarterPel};  // MVD 3.75 px
    int w = 0;
    int h = 0;
    mc_unit_size(16, 16, m, w, h);
    CHECK(w == 4);
    CHECK(h == 4);
  }
}

TEST_CASE("motion_compensate_affine") {
  Frame ref(32, 32);
  ref.y = testsupport::textured_plane(32, 32, 17);
  ref.cb = testsupport::textured_plane(16, 16, 18);
  ref.cr = testsupport::textured_plane(16, 16, 19);
  ref.pad();

  SUBCASE("translation model equals one whole-PU unit") {
    const AffineModel m = translation(5, 9, 16, 8, 8);
    McTelemetry t;
    const PredBlock pred = motion_compensate_affine(ref, 8, 8, 16, m, bank(), t);
    CHECK(t.units == 1);

    std::uint64_t count = 0;
    const PelBlock direct = interpolate_unit(
        ref.y, {8, 8, 16, 16, to_sixty_fourth(m.mv_tl)}, bank(), 8, count);
    CHECK(pred.luma.pel == direct.pel);
  }
  SUBCASE("zoom with 4 qpel/px slope tiles into 16 distinct-MV units") {
    AffineModel m = translation(0, 0, 16, 8, 8);
    m.mv_tr = {60, 0, MvPrec::QuarterPel};  // a = 4 qpel per pixel
    McTelemetry t;
    motion_compensate_affine(ref, 8, 8, 16, m, bank(), t);
    CHECK(t.units == 16);
    int uw = 0;
    int uh = 0;
    mc_unit_size(16, 16, m, uw, uh);
    CHECK(uw == 4);
    CHECK(uh == 4);
    // All unit-center MVs differ along the top row.
    CHECK(mv_at(m, 2, 2) != mv_at(m, 6, 2));
  }
  SUBCASE("pixel-based option matches the pixel-exact oracle path") {
    AffineModel m = translation(3, -5, 16, 8, 8);
    m.mv_tr = {9, -2, MvPrec::QuarterPel};
    McTelemetry t;
    McOptions opts;
    opts.pixel_based = true;
    const PredBlock pred = motion_compensate_affine(ref, 8, 8, 16, m, bank(), t, opts);
    const PelBlock oracle = predict_luma_pixel_exact(ref.y, 8, 8, 16, m, bank());
    CHECK(pred.luma.pel == oracle.pel);
    CHECK(t.units == 256);
  }
  SUBCASE("block path never does more interpolation than the pixel path") {
    AffineModel m = translation(2, 2, 16, 8, 8);
    m.mv_tr = {6, 3, MvPrec::QuarterPel};
    McTelemetry block;
    motion_compensate_affine(ref, 8, 8, 16, m, bank(), block);
    McTelemetry pixel;
    McOptions opts;
    opts.pixel_based = true;
    motion_compensate_affine(ref, 8, 8, 16, m, bank(), pixel, opts);
    CHECK(block.interp.luma < pixel.interp.luma);
    CHECK(block.interp.chroma <= pixel.interp.chroma);
  }
  SUBCASE("reach violations are rejected") {
    std::uint64_t count = 0;
    CHECK_THROWS_AS(interpolate_unit(ref.y, {0, 0, 4, 4,
                                             {-90 * 64, 0, MvPrec::SixtyFourthPel}},
                                     bank(), 8, count),
                    std::out_of_range);
  }
}

TEST_CASE("two-step filter path") {
  Frame ref(32, 32);
  ref.y = testsupport::textured_plane(32, 32, 23);
  ref.pad();

  SUBCASE("quarter-pel MVs match the one-step path bit-exactly") {
    for (int q = 0; q < 8; ++q) {
      std::uint64_t c1 = 0;
      std::uint64_t c2 = 0;
      const McUnit u{8, 8, 8, 8, {q * 16, (7 - q) * 16, MvPrec::SixtyFourthPel}};
      const PelBlock one = interpolate_unit(ref.y, u, bank(), 8, c1);
      const PelBlock two = interpolate_unit_two_step(ref.y, u, bank(), 8, c2);
      CHECK(one.pel == two.pel);
    }
  }
  SUBCASE("sub-quarter phases generally differ from the one-step filter") {
    const McUnit u{8, 8, 8, 8, {37, 11, MvPrec::SixtyFourthPel}};
    std::uint64_t c1 = 0;
    std::uint64_t c2 = 0;
    const PelBlock one = interpolate_unit(ref.y, u, bank(), 8, c1);
    const PelBlock two = interpolate_unit_two_step(ref.y, u, bank(), 8, c2);
    CHECK(one.pel != two.pel);
    CHECK(c2 > c1);  // up to four quarter-pel interpolations behind the blend
  }
}
