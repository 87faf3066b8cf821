#pragma once

#include <cstdint>

#include "affinemc/motion_vector.hpp"

namespace affinemc {

/// Four-parameter affine motion model, represented by the quarter-pel MVs of
/// the block's top-left pixel (0,0) and top-right pixel (width-1,0) plus the
/// block width. Equivalent to the parameter tuple (a, b, c, f) where
///   mv_hor(x,y) =  a*x + b*y + c
///   mv_ver(x,y) = -b*x + a*y + f
/// with a = (mv_tr.hor - mv_tl.hor)/(width-1), b = -(mv_tr.ver - mv_tl.ver)/(width-1),
/// c = mv_tl.hor, f = mv_tl.ver. All arithmetic stays in integer rational form
/// with denominator (width-1); there is exactly one rounded division per
/// evaluated component.
struct AffineModel {
  MotionVector mv_tl;  // quarter-pel, at block-local (0,0)
  MotionVector mv_tr;  // quarter-pel, at block-local (width-1,0)
  std::int32_t width = 0;  // block width in luma samples, power of two >= 8
  std::int32_t org_x = 0;  // block top-left in frame coordinates
  std::int32_t org_y = 0;

  bool is_translation() const { return mv_tl == mv_tr; }
  bool operator==(const AffineModel&) const = default;
};

/// The model parameters in exact rational form. a and b are quarter-pel per
/// pixel with denominator den == width-1; c and f are plain quarter-pel.
struct ModelParams {
  std::int64_t a_num = 0;
  std::int64_t b_num = 0;
  std::int64_t den = 1;
  std::int32_t c_qpel = 0;
  std::int32_t f_qpel = 0;
};

/// Per-pixel linear-combination coefficients for corner-MV interpolation,
/// all over the common denominator (width-1):
///   m0 = 1 - x/(w-1), m1 = x/(w-1), n0 = y/(w-1), n1 = -y/(w-1).
struct BasisRow {
  std::int32_t m0_num = 0;
  std::int32_t m1_num = 0;
  std::int32_t n0_num = 0;
  std::int32_t n1_num = 0;
  std::int32_t den = 1;
};

bool valid_block_width(std::int32_t w);
void validate_model(const AffineModel& model);

ModelParams params_from_corner_mvs(const AffineModel& model);

BasisRow basis_row(std::int32_t x, std::int32_t y, std::int32_t width);

/// Evaluates the per-pixel MV field at block-local (x,y), 0 <= x,y < width.
/// Result is 1/64-pel with one half-away-from-zero division per component.
/// Reproduces the corner MVs exactly: mv_at(0,0) == 16*mv_tl and
/// mv_at(width-1,0) == 16*mv_tr.
MotionVector mv_at(const AffineModel& model, std::int32_t x, std::int32_t y);

/// Same evaluation without the block-local range check; used for the 1-pixel
/// gradient apron around a block.
MotionVector mv_at_unchecked(const AffineModel& model, std::int32_t x, std::int32_t y);

/// The quarter-pel MV the model induces at the bottom-left pixel (0,width-1):
///   hor = mv_tl.hor - (mv_tr.ver - mv_tl.ver)
///   ver = mv_tl.ver + (mv_tr.hor - mv_tl.hor)
/// Exact integer arithmetic, no rounding.
MotionVector derived_third_corner(const AffineModel& model);

/// Builds a model from rotation angle theta (radians), zoom factor rho (> 0)
/// and a quarter-pel translation (c,f): a = rho*cos(theta)-1, b = rho*sin(theta),
/// corner MVs quantized half-away-from-zero to quarter-pel.
AffineModel model_from_rotation_zoom(double theta, double rho, std::int32_t c_qpel,
                                     std::int32_t f_qpel, std::int32_t width);

}  // namespace affinemc
