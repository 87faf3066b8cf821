#pragma once

#include <cstdint>
#include <stdexcept>

namespace affinemc {

/// Fractional-pel precision denominators used by the pipeline.
/// Corner / translational MVs are quarter-pel, MC-unit and per-pixel
/// MVs are 1/64-pel.
enum class MvPrec : int {
  QuarterPel = 4,
  SixtyFourthPel = 64,
};

/// Rounds num/den to the nearest integer, halves away from zero.
/// den must be positive.
constexpr std::int64_t round_half_away(std::int64_t num, std::int64_t den) {
  if (den <= 0) {
    throw std::invalid_argument("round_half_away: denominator must be positive");
  }
  if (num >= 0) {
    return (2 * num + den) / (2 * den);
  }
  return -((-2 * num + den) / (2 * den));
}

/// Fixed-point 2-D displacement. Units are 1/prec of a luma sample.
struct MotionVector {
  std::int32_t hor = 0;
  std::int32_t ver = 0;
  MvPrec prec = MvPrec::QuarterPel;

  constexpr bool operator==(const MotionVector&) const = default;
};

/// Lossless quarter-pel -> 1/64-pel conversion (multiply by 16).
constexpr MotionVector to_sixty_fourth(const MotionVector& mv) {
  if (mv.prec == MvPrec::SixtyFourthPel) {
    return mv;
  }
  return {mv.hor * 16, mv.ver * 16, MvPrec::SixtyFourthPel};
}

/// 1/64-pel -> quarter-pel with half-away-from-zero rounding.
constexpr MotionVector to_quarter(const MotionVector& mv) {
  if (mv.prec == MvPrec::QuarterPel) {
    return mv;
  }
  return {static_cast<std::int32_t>(round_half_away(mv.hor, 16)),
          static_cast<std::int32_t>(round_half_away(mv.ver, 16)),
          MvPrec::QuarterPel};
}

constexpr std::int32_t clamp_component(std::int32_t v, std::int32_t bound) {
  return v < -bound ? -bound : (v > bound ? bound : v);
}

/// Clamps both components to [-bound, bound] (units of the MV itself).
constexpr MotionVector clamp_mv(const MotionVector& mv, std::int32_t bound) {
  return {clamp_component(mv.hor, bound), clamp_component(mv.ver, bound), mv.prec};
}

}  // namespace affinemc
