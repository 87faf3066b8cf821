#include "affinemc/normal_system.hpp"

#include <cmath>
#include <stdexcept>

#include "affinemc/affine_model.hpp"

namespace affinemc {

NormalSystem build_normal_system(const ResidualBlock& err, const GradientField& grads,
                                 int block_width) {
  if (err.width != grads.width || err.height != grads.height) {
    throw std::invalid_argument("build_normal_system: residual/gradient size mismatch");
  }
  if (!valid_block_width(block_width)) {
    throw std::invalid_argument("build_normal_system: invalid block width");
  }
  const double den = block_width - 1;
  NormalSystem sys;
  for (int y = 0; y < err.height; ++y) {
    const double n0 = y / den;
    for (int x = 0; x < err.width; ++x) {
      const double m1 = x / den;
      const double m0 = 1.0 - m1;
      const double gx = grads.gx_eighths(x, y) / 8.0;
      const double gy = grads.gy_eighths(x, y) / 8.0;
      // r = [gx gy] * [[m0 m1 n0 -n0], [-n0 n0 m0 m1]]
      const double r[4] = {gx * m0 - gy * n0, gx * m1 + gy * n0,
                           gx * n0 + gy * m0, -gx * n0 + gy * m1};
      const double e = err.at(x, y);
      for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
          sys.h[i][j] += r[i] * r[j];
        }
        sys.rhs[i] += e * r[i];
      }
    }
  }
  for (int i = 1; i < 4; ++i) {
    for (int j = 0; j < i; ++j) {
      sys.h[i][j] = sys.h[j][i];
    }
  }
  return sys;
}

std::optional<std::array<double, 4>> solve_normal_system(const NormalSystem& sys) {
  double a[4][5];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      a[i][j] = sys.h[i][j];
    }
    a[i][4] = sys.rhs[i];
  }
  double max_diag = 0.0;
  for (int i = 0; i < 4; ++i) {
    max_diag = std::max(max_diag, std::abs(a[i][i]));
  }
  if (max_diag == 0.0) {
    return std::nullopt;
  }
  const double threshold = 1e-8 * max_diag;

  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) {
        pivot = r;
      }
    }
    if (std::abs(a[pivot][col]) < threshold) {
      return std::nullopt;
    }
    if (pivot != col) {
      for (int j = 0; j < 5; ++j) {
        std::swap(a[pivot][j], a[col][j]);
      }
    }
    for (int r = col + 1; r < 4; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int j = col; j < 5; ++j) {
        a[r][j] -= f * a[col][j];
      }
    }
  }

  std::array<double, 4> x{};
  for (int i = 3; i >= 0; --i) {
    double acc = a[i][4];
    for (int j = i + 1; j < 4; ++j) {
      acc -= a[i][j] * x[j];
    }
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace affinemc
