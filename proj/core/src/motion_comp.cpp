#include "affinemc/motion_comp.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace affinemc {

namespace {

constexpr int kFinalShift = 12;  // two 6-bit filter gains
constexpr int kFinalOffset = 1 << (kFinalShift - 1);

std::uint8_t clip_pel(int v) {
  return static_cast<std::uint8_t>(std::clamp(v, 0, 255));
}

const std::int16_t* taps_row(const FilterBank& bank, int num_taps, int phase) {
  return num_taps == FilterBank::kLumaTaps ? bank.luma[phase].data()
                                           : bank.chroma[phase].data();
}

void split_mv(std::int32_t v, int& integer, int& phase) {
  integer = v >> 6;
  phase = v & 63;
}

// MVs fed to the interpolators are kept this many pixels short of the margin
// so the filter reach always stays inside the padded plane.
std::int32_t reach_clamp_64(const Plane& plane) {
  return (plane.margin() - 6) * 64;
}

MotionVector clamp_for_reach(const MotionVector& mv, const Plane& plane) {
  return clamp_mv(mv, reach_clamp_64(plane));
}

}  // namespace

PelBlock interpolate_unit(const Plane& ref, const McUnit& unit, const FilterBank& bank,
                          int num_taps, std::uint64_t& count) {
  if (num_taps != 4 && num_taps != 8) {
    throw std::invalid_argument("interpolate_unit: tap count must be 4 or 8");
  }
  if (unit.width < 1 || unit.height < 1) {
    throw std::invalid_argument("interpolate_unit: empty unit");
  }
  if (unit.mv.prec != MvPrec::SixtyFourthPel) {
    throw std::invalid_argument("interpolate_unit: MV must be 1/64-pel");
  }
  const int half = num_taps / 2;
  int ix = 0;
  int fx = 0;
  int iy = 0;
  int fy = 0;
  split_mv(unit.mv.hor, ix, fx);
  split_mv(unit.mv.ver, iy, fy);

  const int src_x = unit.x + ix;
  const int src_y = unit.y + iy;
  const int rows = (fy != 0) ? unit.height + num_taps - 1 : unit.height;
  const int row0 = (fy != 0) ? src_y - (half - 1) : src_y;
  const int x_lo = (fx != 0) ? src_x - (half - 1) : src_x;
  const int x_hi = (fx != 0) ? src_x + unit.width - 1 + half : src_x + unit.width - 1;
  if (!ref.in_padded(x_lo, row0) || !ref.in_padded(x_hi, row0 + rows - 1)) {
    throw std::out_of_range("interpolate_unit: filter reach exceeds padded plane");
  }

  std::vector<std::int32_t> tmp(static_cast<std::size_t>(rows) * unit.width);
  if (fx != 0) {
    const std::int16_t* c = taps_row(bank, num_taps, fx);
    for (int r = 0; r < rows; ++r) {
      for (int col = 0; col < unit.width; ++col) {
        std::int32_t acc = 0;
        for (int j = 0; j < num_taps; ++j) {
          acc += c[j] * ref.at(x_lo + col + j, row0 + r);
        }
        tmp[static_cast<std::size_t>(r) * unit.width + col] = acc;
      }
    }
    count += static_cast<std::uint64_t>(rows) * unit.width;
  } else {
    for (int r = 0; r < rows; ++r) {
      for (int col = 0; col < unit.width; ++col) {
        tmp[static_cast<std::size_t>(r) * unit.width + col] = 64 * ref.at(src_x + col, row0 + r);
      }
    }
  }

  PelBlock out(unit.width, unit.height);
  if (fy != 0) {
    const std::int16_t* c = taps_row(bank, num_taps, fy);
    for (int r = 0; r < unit.height; ++r) {
      for (int col = 0; col < unit.width; ++col) {
        std::int32_t acc = 0;
        for (int j = 0; j < num_taps; ++j) {
          acc += c[j] * tmp[static_cast<std::size_t>(r + j) * unit.width + col];
        }
        out.at(col, r) = clip_pel((acc + kFinalOffset) >> kFinalShift);
      }
    }
    count += static_cast<std::uint64_t>(unit.height) * unit.width;
  } else {
    for (int r = 0; r < unit.height; ++r) {
      for (int col = 0; col < unit.width; ++col) {
        const std::int32_t acc = 64 * tmp[static_cast<std::size_t>(r) * unit.width + col];
        out.at(col, r) = clip_pel((acc + kFinalOffset) >> kFinalShift);
      }
    }
  }
  return out;
}

PelBlock interpolate_unit_two_step(const Plane& ref, const McUnit& unit,
                                   const FilterBank& bank, int num_taps,
                                   std::uint64_t& count) {
  if (unit.mv.prec != MvPrec::SixtyFourthPel) {
    throw std::invalid_argument("interpolate_unit_two_step: MV must be 1/64-pel");
  }
  const int qh = unit.mv.hor >> 4;  // quarter-pel floor
  const int qv = unit.mv.ver >> 4;
  const int rh = unit.mv.hor & 15;  // sub-quarter remainder, 0..15
  const int rv = unit.mv.ver & 15;

  const auto quarter = [&](int dh, int dv) {
    McUnit u = unit;
    u.mv = {(qh + dh) * 16, (qv + dv) * 16, MvPrec::SixtyFourthPel};
    return interpolate_unit(ref, u, bank, num_taps, count);
  };

  const PelBlock p00 = quarter(0, 0);
  if (rh == 0 && rv == 0) {
    return p00;
  }
  const PelBlock p10 = (rh != 0) ? quarter(1, 0) : p00;
  const PelBlock p01 = (rv != 0) ? quarter(0, 1) : p00;
  const PelBlock p11 = (rh != 0 && rv != 0) ? quarter(1, 1) : (rh != 0 ? p10 : p01);

  PelBlock out(unit.width, unit.height);
  for (int y = 0; y < unit.height; ++y) {
    for (int x = 0; x < unit.width; ++x) {
      const int acc = (16 - rh) * (16 - rv) * p00.at(x, y) + rh * (16 - rv) * p10.at(x, y) +
                      (16 - rh) * rv * p01.at(x, y) + rh * rv * p11.at(x, y);
      out.at(x, y) = clip_pel((acc + 128) >> 8);
    }
  }
  return out;
}

namespace {

int unit_dim(int pu_dim, std::int32_t mvd_qpel) {
  if (mvd_qpel == 0) {
    return pu_dim;
  }
  // Raw size is pu_dim / (mvd_pel / (1/8 pel)) = pu_dim / (2 * mvd_qpel);
  // round down to a power of two and clamp to [4, pu_dim].
  int p2 = pu_dim;
  while (p2 > 4 && std::int64_t{p2} * 2 * mvd_qpel > pu_dim) {
    p2 >>= 1;
  }
  return p2;
}

}  // namespace

void mc_unit_size(int pu_width, int pu_height, const AffineModel& model,
                  int& unit_width, int& unit_height) {
  validate_model(model);
  if (!valid_block_width(pu_width) || !valid_block_width(pu_height)) {
    throw std::invalid_argument("mc_unit_size: PU dims must be powers of two >= 8");
  }
  const std::int32_t mvd_top = std::max(std::abs(model.mv_tr.hor - model.mv_tl.hor),
                                        std::abs(model.mv_tr.ver - model.mv_tl.ver));
  const MotionVector mv_bl = derived_third_corner(model);
  const std::int32_t mvd_left = std::max(std::abs(mv_bl.hor - model.mv_tl.hor),
                                         std::abs(mv_bl.ver - model.mv_tl.ver));
  unit_width = unit_dim(pu_width, mvd_top);
  unit_height = unit_dim(pu_height, mvd_left);
}

PredBlock motion_compensate_affine(const Frame& ref, int pu_x, int pu_y, int pu_size,
                                   const AffineModel& model, const FilterBank& bank,
                                   McTelemetry& telemetry, const McOptions& opts) {
  validate_model(model);
  if (model.width != pu_size) {
    throw std::invalid_argument("motion_compensate_affine: model width != PU size");
  }
  if (pu_x < 0 || pu_y < 0 || pu_x + pu_size > ref.width() || pu_y + pu_size > ref.height()) {
    throw std::invalid_argument("motion_compensate_affine: PU outside frame");
  }
  if ((pu_x | pu_y) & 1) {
    throw std::invalid_argument("motion_compensate_affine: PU origin must be even");
  }

  int uw = 1;
  int uh = 1;
  if (!opts.pixel_based) {
    mc_unit_size(pu_size, pu_size, model, uw, uh);
  }

  PredBlock out;
  out.luma = PelBlock(pu_size, pu_size);
  const int csize = pu_size / 2;
  out.cb = PelBlock(csize, csize);
  out.cr = PelBlock(csize, csize);

  for (int uy = 0; uy < pu_size; uy += uh) {
    for (int ux = 0; ux < pu_size; ux += uw) {
      const MotionVector mv =
          clamp_for_reach(mv_at(model, ux + uw / 2, uy + uh / 2), ref.y);
      McUnit unit{pu_x + ux, pu_y + uy, uw, uh, mv};
      const PelBlock block = opts.two_step
                                 ? interpolate_unit_two_step(ref.y, unit, bank,
                                                             FilterBank::kLumaTaps,
                                                             telemetry.interp.luma)
                                 : interpolate_unit(ref.y, unit, bank, FilterBank::kLumaTaps,
                                                    telemetry.interp.luma);
      for (int y = 0; y < uh; ++y) {
        for (int x = 0; x < uw; ++x) {
          out.luma.at(ux + x, uy + y) = block.at(x, y);
        }
      }
      ++telemetry.units;
    }
  }

  // Chroma rides the halved luma tiling on its own grid with halved MVs.
  const int cuw = std::max(1, uw / 2);
  const int cuh = std::max(1, uh / 2);
  for (int cuy = 0; cuy < csize; cuy += cuh) {
    for (int cux = 0; cux < csize; cux += cuw) {
      const MotionVector luma_mv = mv_at(model, 2 * cux + uw / 2, 2 * cuy + uh / 2);
      const MotionVector mv = clamp_for_reach(
          {static_cast<std::int32_t>(round_half_away(luma_mv.hor, 2)),
           static_cast<std::int32_t>(round_half_away(luma_mv.ver, 2)),
           MvPrec::SixtyFourthPel},
          ref.cb);
      for (Plane const* plane : {&ref.cb, &ref.cr}) {
        McUnit unit{pu_x / 2 + cux, pu_y / 2 + cuy, cuw, cuh, mv};
        const PelBlock block =
            opts.two_step ? interpolate_unit_two_step(*plane, unit, bank,
                                                      FilterBank::kChromaTaps,
                                                      telemetry.interp.chroma)
                          : interpolate_unit(*plane, unit, bank, FilterBank::kChromaTaps,
                                             telemetry.interp.chroma);
        PelBlock& dst = (plane == &ref.cb) ? out.cb : out.cr;
        for (int y = 0; y < cuh; ++y) {
          for (int x = 0; x < cuw; ++x) {
            dst.at(cux + x, cuy + y) = block.at(x, y);
          }
        }
      }
    }
  }
  return out;
}

namespace {

// One pixel of the pixel-exact path; arithmetic matches interpolate_unit on a
// 1x1 unit exactly.
std::uint8_t sample_pixel(const Plane& ref, int x, int y, const MotionVector& mv,
                          const FilterBank& bank) {
  int ix = 0;
  int fx = 0;
  int iy = 0;
  int fy = 0;
  split_mv(mv.hor, ix, fx);
  split_mv(mv.ver, iy, fy);
  const int sx = x + ix;
  const int sy = y + iy;

  const std::int16_t* cx = bank.luma[fx].data();
  const std::int16_t* cy = bank.luma[fy].data();

  std::int32_t acc = 0;
  if (fy != 0) {
    for (int j = 0; j < FilterBank::kLumaTaps; ++j) {
      const int row = sy - 3 + j;
      std::int32_t h = 0;
      if (fx != 0) {
        for (int i = 0; i < FilterBank::kLumaTaps; ++i) {
          h += cx[i] * ref.at(sx - 3 + i, row);
        }
      } else {
        h = 64 * ref.at(sx, row);
      }
      acc += cy[j] * h;
    }
  } else {
    std::int32_t h = 0;
    if (fx != 0) {
      for (int i = 0; i < FilterBank::kLumaTaps; ++i) {
        h += cx[i] * ref.at(sx - 3 + i, sy);
      }
    } else {
      h = 64 * ref.at(sx, sy);
    }
    acc = 64 * h;
  }
  return clip_pel((acc + kFinalOffset) >> kFinalShift);
}

PelBlock predict_luma_pixels(const Plane& ref, int pu_x, int pu_y, int pu_size,
                             const AffineModel& model, const FilterBank& bank, int apron) {
  const std::int32_t bound = reach_clamp_64(ref);
  PelBlock out(pu_size + 2 * apron, pu_size + 2 * apron);
  for (int y = -apron; y < pu_size + apron; ++y) {
    for (int x = -apron; x < pu_size + apron; ++x) {
      const MotionVector mv = clamp_mv(mv_at_unchecked(model, x, y), bound);
      out.at(x + apron, y + apron) = sample_pixel(ref, pu_x + x, pu_y + y, mv, bank);
    }
  }
  return out;
}

}  // namespace

PelBlock predict_luma_with_apron(const Plane& ref, int pu_x, int pu_y, int pu_size,
                                 const AffineModel& model, const FilterBank& bank) {
  return predict_luma_pixels(ref, pu_x, pu_y, pu_size, model, bank, 1);
}

PelBlock predict_luma_pixel_exact(const Plane& ref, int pu_x, int pu_y, int pu_size,
                                  const AffineModel& model, const FilterBank& bank) {
  return predict_luma_pixels(ref, pu_x, pu_y, pu_size, model, bank, 0);
}

}  // namespace affinemc
