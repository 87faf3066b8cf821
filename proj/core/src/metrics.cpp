#include "affinemc/metrics.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace affinemc {

std::uint64_t sse(const Plane& a, int ax, int ay, const Plane& b, int bx, int by,
                  int width, int height) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("sse: empty region");
  }
  std::uint64_t acc = 0;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const int d = int{a.at(ax + x, ay + y)} - int{b.at(bx + x, by + y)};
      acc += static_cast<std::uint64_t>(d * d);
    }
  }
  return acc;
}

std::uint64_t sse(const Plane& a, int ax, int ay, const PelBlock& b) {
  std::uint64_t acc = 0;
  for (int y = 0; y < b.height; ++y) {
    for (int x = 0; x < b.width; ++x) {
      const int d = int{a.at(ax + x, ay + y)} - int{b.at(x, y)};
      acc += static_cast<std::uint64_t>(d * d);
    }
  }
  return acc;
}

std::uint64_t sse(const PelBlock& a, const PelBlock& b) {
  if (a.width != b.width || a.height != b.height) {
    throw std::invalid_argument("sse: block size mismatch");
  }
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < a.pel.size(); ++i) {
    const int d = int{a.pel[i]} - int{b.pel[i]};
    acc += static_cast<std::uint64_t>(d * d);
  }
  return acc;
}

std::uint64_t sad(const Plane& a, int ax, int ay, const Plane& b, int bx, int by,
                  int width, int height) {
  std::uint64_t acc = 0;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      acc += static_cast<std::uint64_t>(
          std::abs(int{a.at(ax + x, ay + y)} - int{b.at(bx + x, by + y)}));
    }
  }
  return acc;
}

namespace {

double plane_psnr(const Plane& a, const Plane& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::invalid_argument("psnr: dimension mismatch");
  }
  const std::uint64_t e = sse(a, 0, 0, b, 0, 0, a.width(), a.height());
  if (e == 0) {
    return std::numeric_limits<double>::infinity();
  }
  const double n = static_cast<double>(a.width()) * a.height();
  return 10.0 * std::log10(255.0 * 255.0 * n / static_cast<double>(e));
}

}  // namespace

PlanePsnr psnr(const Frame& a, const Frame& b) {
  return {plane_psnr(a.y, b.y), plane_psnr(a.cb, b.cb), plane_psnr(a.cr, b.cr)};
}

}  // namespace affinemc
