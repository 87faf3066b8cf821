#pragma once

#include <cstdint>
#include <vector>

#include "affinemc/plane.hpp"

namespace affinemc {

/// Per-pixel Sobel gradients over a block. Values are stored as the raw
/// 3x3 Sobel sums, i.e. eighths of a sample level per pixel; the exact /8
/// is applied when the values enter the normal-equation accumulation.
struct GradientField {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> gx_e8;
  std::vector<std::int32_t> gy_e8;

  std::int32_t gx_eighths(int x, int y) const {
    return gx_e8[static_cast<std::size_t>(y) * width + x];
  }
  std::int32_t gy_eighths(int x, int y) const {
    return gy_e8[static_cast<std::size_t>(y) * width + x];
  }
  double gx(int x, int y) const { return gx_eighths(x, y) / 8.0; }
  double gy(int x, int y) const { return gy_eighths(x, y) / 8.0; }
};

/// Sobel gradients of the interior of a block carried with a 1-pixel apron:
/// `apron` is (w+2)x(h+2) and the result is w x h.
GradientField sobel_gradient(const PelBlock& apron);

}  // namespace affinemc
