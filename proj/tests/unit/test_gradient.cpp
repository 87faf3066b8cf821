#include <doctest.h>

#include "affinemc/gradient.hpp"

using namespace affinemc;

namespace {

// (w+2)x(h+2) apron filled from a sample function of absolute coordinates.
template <typename F>
PelBlock apron_from(int w, int h, F f) {
  PelBlock b(w + 2, h + 2);
  for (int y = 0; y < h + 2; ++y) {
    for (int x = 0; x < w + 2; ++x) {
      b.at(x, y) = static_cast<std::uint8_t>(f(x - 1, y - 1));
    }
  }
  return b;
}

}  // namespace

TEST_CASE("sobel on a unit ramp") {
  const PelBlock apron = apron_from(6, 6, [](int x, int) { return 50 + x; });
  const GradientField g = sobel_gradient(apron);
  for (int y = 0; y < 6; ++y) {
    for (int x = 0; x < 6; ++x) {
      CHECK(g.gx_eighths(x, y) == 8);
      CHECK(g.gy_eighths(x, y) == 0);
      CHECK(g.gx(x, y) == 1.0);
    }
  }
}

TEST_CASE("sobel on a constant block") {
  const PelBlock apron = apron_from(4, 4, [](int, int) { return 99; });
  const GradientField g = sobel_gradient(apron);
  for (int y = 0; y < 4; ++y) {
    for (int x = 0; x < 4; ++x) {
      CHECK(g.gx_eighths(x, y) == 0);
      CHECK(g.gy_eighths(x, y) == 0);
    }
  }
}

TEST_CASE("sobel on a doubled vertical ramp") {
  const PelBlock apron = apron_from(5, 5, [](int, int y) { return 60 + 2 * y; });
  const GradientField g = sobel_gradient(apron);
  for (int y = 0; y < 5; ++y) {
    for (int x = 0; x < 5; ++x) {
      CHECK(g.gx(x, y) == 0.0);
      CHECK(g.gy(x, y) == 2.0);
    }
  }
}

TEST_CASE("apron too small is rejected") {
  CHECK_THROWS_AS(sobel_gradient(PelBlock(2, 5)), std::invalid_argument);
}
