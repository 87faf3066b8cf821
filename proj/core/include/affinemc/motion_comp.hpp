#pragma once

#include <cstdint>

#include "affinemc/affine_model.hpp"
#include "affinemc/filter_bank.hpp"
#include "affinemc/frame.hpp"
#include "affinemc/motion_vector.hpp"
#include "affinemc/plane.hpp"

namespace affinemc {

/// A rectangle whose pixels all share one 1/64-pel MV.
struct McUnit {
  int x = 0;  // frame coordinates of the top-left output sample
  int y = 0;
  int width = 0;
  int height = 0;
  MotionVector mv;  // prec 64
};

struct InterpCounts {
  std::uint64_t luma = 0;
  std::uint64_t chroma = 0;

  InterpCounts& operator+=(const InterpCounts& o) {
    luma += o.luma;
    chroma += o.chroma;
    return *this;
  }
};

/// Separable one-step interpolation of a unit: horizontal pass at the MV's
/// fractional x-phase over (height + taps - 1) source rows, vertical pass at
/// the y-phase, one final half-up rounding shift of 12 (two 6-bit gains),
/// clamp to [0,255]. Zero-phase passes are copy-through and contribute zero
/// to `count`; otherwise `count` grows by one per filter application (each
/// intermediate or output sample).
PelBlock interpolate_unit(const Plane& ref, const McUnit& unit, const FilterBank& bank,
                          int num_taps, std::uint64_t& count);

/// Legacy two-step path: the four surrounding quarter-pel samples are
/// produced with the one-step filter at phases {0,16,32,48} and blended
/// bilinearly by the sub-quarter remainder. Kept as a comparison arm; on
/// quarter-pel MVs it matches interpolate_unit bit-exactly.
PelBlock interpolate_unit_two_step(const Plane& ref, const McUnit& unit,
                                   const FilterBank& bank, int num_taps,
                                   std::uint64_t& count);

/// Adaptive MC-unit dimensions for a PU carrying `model` (both power of two,
/// clamped to [4, PU dimension]). A translational model yields one full-PU
/// unit. Larger corner-MV spreads shrink the unit so the per-unit MV error
/// stays below 1/8 pixel.
void mc_unit_size(int pu_width, int pu_height, const AffineModel& model,
                  int& unit_width, int& unit_height);

struct McTelemetry {
  int units = 0;
  InterpCounts interp;
};

struct PredBlock {
  PelBlock luma;
  PelBlock cb;
  PelBlock cr;
};

struct McOptions {
  bool pixel_based = false;  // force 1x1 units (reference/oracle path)
  bool two_step = false;     // legacy two-step filter path
};

/// Motion-compensates one PU: tiles it into mc_unit_size units (or 1x1 when
/// pixel_based), takes each unit's MV from the model field at the unit
/// center, and interpolates luma with 8 taps and chroma with 4 taps on the
/// co-located chroma grid with halved MVs.
PredBlock motion_compensate_affine(const Frame& ref, int pu_x, int pu_y, int pu_size,
                                   const AffineModel& model, const FilterBank& bank,
                                   McTelemetry& telemetry, const McOptions& opts = {});

/// Luma-only pixel-exact prediction with a 1-pixel apron on every side,
/// i.e. a (size+2)^2 block whose (0,0) corresponds to block-local (-1,-1).
/// This is the motion-estimation view of the prediction; the apron feeds the
/// Sobel gradients.
PelBlock predict_luma_with_apron(const Plane& ref, int pu_x, int pu_y, int pu_size,
                                 const AffineModel& model, const FilterBank& bank);

/// Luma-only pixel-exact prediction without apron (oracle path).
PelBlock predict_luma_pixel_exact(const Plane& ref, int pu_x, int pu_y, int pu_size,
                                  const AffineModel& model, const FilterBank& bank);

}  // namespace affinemc
