#pragma once

#include <array>
#include <optional>

#include "affinemc/gradient.hpp"
#include "affinemc/plane.hpp"

namespace affinemc {

/// Accumulated 4x4 least-squares system for one Gauss-Newton step. Unknown
/// ordering is [d_mv_tl.hor, d_mv_tr.hor, d_mv_tl.ver, d_mv_tr.ver] in pixel
/// units. `h` is a Gram matrix: symmetric and positive semi-definite by
/// construction.
struct NormalSystem {
  std::array<std::array<double, 4>, 4> h{};
  std::array<double, 4> rhs{};
};

/// Residual block e(p) = original - prediction, int16 per pixel.
struct ResidualBlock {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> e;

  std::int32_t at(int x, int y) const { return e[static_cast<std::size_t>(y) * width + x]; }
};

/// Accumulates h += r(p)^T r(p) and rhs += e(p) * r(p) over the block, where
/// r(p) is the gradient row times the corner-MV interpolation matrix at p
/// (the /8 Sobel normalization is applied here, exactly).
NormalSystem build_normal_system(const ResidualBlock& err, const GradientField& grads,
                                 int block_width);

/// Gaussian elimination with partial pivoting; a pivot below 1e-8 relative
/// to the largest initial diagonal entry reports singular (no usable step).
std::optional<std::array<double, 4>> solve_normal_system(const NormalSystem& sys);

}  // namespace affinemc
