#include "affinemc/gradient.hpp"

#include <stdexcept>

namespace affinemc {

GradientField sobel_gradient(const PelBlock& apron) {
  if (apron.width < 3 || apron.height < 3) {
    throw std::invalid_argument("sobel_gradient: apron must be at least 3x3");
  }
  GradientField g;
  g.width = apron.width - 2;
  g.height = apron.height - 2;
  g.gx_e8.resize(static_cast<std::size_t>(g.width) * g.height);
  g.gy_e8.resize(static_cast<std::size_t>(g.width) * g.height);

  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      // Apron coordinates of the pixel are (x+1, y+1).
      const auto p = [&](int dx, int dy) {
        return static_cast<std::int32_t>(apron.at(x + 1 + dx, y + 1 + dy));
      };
      const std::int32_t gx = (p(1, 1) - p(-1, 1)) + (p(1, -1) - p(-1, -1)) +
                              2 * (p(1, 0) - p(-1, 0));
      const std::int32_t gy = (p(1, 1) - p(1, -1)) + (p(-1, 1) - p(-1, -1)) +
                              2 * (p(0, 1) - p(0, -1));
      g.gx_e8[static_cast<std::size_t>(y) * g.width + x] = gx;
      g.gy_e8[static_cast<std::size_t>(y) * g.width + x] = gy;
    }
  }
  return g;
}

}  // namespace affinemc
