#include "affinemc/rd.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace affinemc {

int eg_signed_len(std::int32_t v) {
  // Signed mapping: 0 -> 0, 1 -> 1, -1 -> 2, 2 -> 3, ...
  const std::uint32_t n = v > 0 ? 2 * static_cast<std::uint32_t>(v) - 1
                                : 2 * static_cast<std::uint32_t>(-std::int64_t{v});
  return 2 * (std::bit_width(n + 1) - 1) + 1;
}

int bits_translational(const MotionVector& mvd) {
  return 2 + eg_signed_len(mvd.hor) + eg_signed_len(mvd.ver);
}

int bits_affine_aamvp(const MotionVector& mvd0, const MotionVector& mvd1) {
  return 2 + 1 + eg_signed_len(mvd0.hor) + eg_signed_len(mvd0.ver) +
         eg_signed_len(mvd1.hor) + eg_signed_len(mvd1.ver);
}

int bits_affine_amm() {
  return 3;
}

double lambda_from_qp(int qp) {
  return 0.85 * std::exp2((qp - 12) / 3.0);
}

double rd_cost(std::uint64_t sse, int bits, double lambda) {
  if (lambda <= 0.0) {
    throw std::invalid_argument("rd_cost: lambda must be positive");
  }
  return static_cast<double>(sse) + lambda * bits;
}

}  // namespace affinemc
