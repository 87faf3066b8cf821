#pragma once

#include <cstdint>

#include "affinemc/frame.hpp"
#include "affinemc/plane.hpp"

namespace affinemc {

/// Sum of squared sample differences between two equally sized regions.
std::uint64_t sse(const Plane& a, int ax, int ay, const Plane& b, int bx, int by,
                  int width, int height);

/// SSE between a plane region and a prediction block of the same size.
std::uint64_t sse(const Plane& a, int ax, int ay, const PelBlock& b);

std::uint64_t sse(const PelBlock& a, const PelBlock& b);

/// Sum of absolute differences; integer-pel matching cost.
std::uint64_t sad(const Plane& a, int ax, int ay, const Plane& b, int bx, int by,
                  int width, int height);

struct PlanePsnr {
  double y = 0.0;
  double cb = 0.0;
  double cr = 0.0;
};

/// 10*log10(255^2*N / SSE) per plane; identical planes report +infinity.
PlanePsnr psnr(const Frame& a, const Frame& b);

}  // namespace affinemc
