#include "affinemc/affine_model.hpp"

#include <cmath>
#include <stdexcept>

namespace affinemc {

bool valid_block_width(std::int32_t w) {
  return w >= 8 && (w & (w - 1)) == 0;
}

void validate_model(const AffineModel& model) {
  if (!valid_block_width(model.width)) {
    throw std::invalid_argument("AffineModel: width must be a power of two >= 8");
  }
  if (model.mv_tl.prec != MvPrec::QuarterPel || model.mv_tr.prec != MvPrec::QuarterPel) {
    throw std::invalid_argument("AffineModel: corner MVs must be quarter-pel");
  }
}

ModelParams params_from_corner_mvs(const AffineModel& model) {
  validate_model(model);
  ModelParams p;
  p.den = model.width - 1;
  p.a_num = model.mv_tr.hor - model.mv_tl.hor;
  p.b_num = -(model.mv_tr.ver - model.mv_tl.ver);
  p.c_qpel = model.mv_tl.hor;
  p.f_qpel = model.mv_tl.ver;
  return p;
}

BasisRow basis_row(std::int32_t x, std::int32_t y, std::int32_t width) {
  if (!valid_block_width(width)) {
    throw std::invalid_argument("basis_row: invalid block width");
  }
  const std::int32_t den = width - 1;
  return {den - x, x, y, -y, den};
}

namespace {

MotionVector eval_field(const AffineModel& model, std::int32_t x, std::int32_t y) {
  const std::int64_t den = model.width - 1;
  const std::int64_t dh = model.mv_tr.hor - model.mv_tl.hor;
  const std::int64_t dv = model.mv_tr.ver - model.mv_tl.ver;
  const std::int64_t hor_num = dh * x - dv * y + std::int64_t{model.mv_tl.hor} * den;
  const std::int64_t ver_num = dv * x + dh * y + std::int64_t{model.mv_tl.ver} * den;
  return {static_cast<std::int32_t>(round_half_away(16 * hor_num, den)),
          static_cast<std::int32_t>(round_half_away(16 * ver_num, den)),
          MvPrec::SixtyFourthPel};
}

}  // namespace

MotionVector mv_at(const AffineModel& model, std::int32_t x, std::int32_t y) {
  validate_model(model);
  if (x < 0 || x >= model.width || y < 0 || y >= model.width) {
    throw std::out_of_range("mv_at: block-local coordinates out of range");
  }
  return eval_field(model, x, y);
}

MotionVector mv_at_unchecked(const AffineModel& model, std::int32_t x, std::int32_t y) {
  return eval_field(model, x, y);
}

MotionVector derived_third_corner(const AffineModel& model) {
  validate_model(model);
  return {model.mv_tl.hor - (model.mv_tr.ver - model.mv_tl.ver),
          model.mv_tl.ver + (model.mv_tr.hor - model.mv_tl.hor),
          MvPrec::QuarterPel};
}

AffineModel model_from_rotation_zoom(double theta, double rho, std::int32_t c_qpel,
                                     std::int32_t f_qpel, std::int32_t width) {
  if (rho <= 0.0) {
    throw std::invalid_argument("model_from_rotation_zoom: rho must be positive");
  }
  if (!valid_block_width(width)) {
    throw std::invalid_argument("model_from_rotation_zoom: invalid block width");
  }
  const double a = rho * std::cos(theta) - 1.0;
  const double b = rho * std::sin(theta);
  const double span = width - 1;
  // a and b are pixels per pixel; the corner offset a*(width-1) is quantized
  // to quarter-pel half-away-from-zero.
  const auto q = [](double pel) {
    const double v = pel * 4.0;
    return static_cast<std::int32_t>(v >= 0 ? std::floor(v + 0.5) : std::ceil(v - 0.5));
  };
  AffineModel m;
  m.mv_tl = {c_qpel, f_qpel, MvPrec::QuarterPel};
  m.mv_tr = {q(a * span) + c_qpel, q(-b * span) + f_qpel, MvPrec::QuarterPel};
  m.width = width;
  return m;
}

}  // namespace affinemc
