#include "affinemc/motion_search.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "affinemc/gradient.hpp"
#include "affinemc/metrics.hpp"
#include "affinemc/motion_comp.hpp"
#include "affinemc/normal_system.hpp"

namespace affinemc {

namespace {

std::uint64_t block_sse_from_apron(const Plane& cur, int x, int y, const PelBlock& apron) {
  std::uint64_t acc = 0;
  for (int j = 0; j < apron.height - 2; ++j) {
    for (int i = 0; i < apron.width - 2; ++i) {
      const int d = int{cur.at(x + i, y + j)} - int{apron.at(i + 1, j + 1)};
      acc += static_cast<std::uint64_t>(d * d);
    }
  }
  return acc;
}

ResidualBlock residual_from_apron(const Plane& cur, int x, int y, const PelBlock& apron) {
  ResidualBlock r;
  r.width = apron.width - 2;
  r.height = apron.height - 2;
  r.e.resize(static_cast<std::size_t>(r.width) * r.height);
  for (int j = 0; j < r.height; ++j) {
    for (int i = 0; i < r.width; ++i) {
      r.e[static_cast<std::size_t>(j) * r.width + i] =
          std::int32_t{cur.at(x + i, y + j)} - std::int32_t{apron.at(i + 1, j + 1)};
    }
  }
  return r;
}

// Damped step, quantized half-away-from-zero to quarter-pel. The damping
// keeps the lattice point nearest the continuous optimum a fixed point of
// the iteration even when Sobel-vs-interpolator mismatch inflates the step
// estimate; the undamped step flips
// between the two neighbors forever when the optimum falls mid-cell.
constexpr double kStepDamping = 0.8;

std::int32_t quantize_step_qpel(double pel) {
  const double v = kStepDamping * pel * 4.0;
  return static_cast<std::int32_t>(v >= 0 ? std::floor(v + 0.5) : std::ceil(v - 0.5));
}

}  // namespace

AffineMeResult affine_me(const Plane& cur, const Plane& ref, int pu_x, int pu_y,
                         int pu_size, const AffineModel& start, const FilterBank& bank,
                         const SearchConfig& cfg) {
  if (cfg.range < 1 || cfg.max_iters_affine < 1) {
    throw std::invalid_argument("affine_me: invalid search config");
  }
  const std::int32_t bound = cfg.range * 4;

  AffineModel model = start;
  model.mv_tl = clamp_mv(model.mv_tl, bound);
  model.mv_tr = clamp_mv(model.mv_tr, bound);

  AffineMeResult best;
  best.model = model;
  best.sse = UINT64_MAX;

  for (int it = 1; it <= cfg.max_iters_affine; ++it) {
    const PelBlock apron = predict_luma_with_apron(ref, pu_x, pu_y, pu_size, model, bank);
    const std::uint64_t cost = block_sse_from_apron(cur, pu_x, pu_y, apron);
    if (cost < best.sse) {
      best.sse = cost;
      best.model = model;
    }
    best.iterations = it;
    if (cost == 0) {
      best.converged = true;
      return best;
    }

    const ResidualBlock err = residual_from_apron(cur, pu_x, pu_y, apron);
    const GradientField grads = sobel_gradient(apron);
    const NormalSystem sys = build_normal_system(err, grads, pu_size);
    const auto step = solve_normal_system(sys);
    if (!step) {
      // No usable descent direction; treated as converged.
      best.converged = true;
      return best;
    }

    const std::int32_t d_tl_h = quantize_step_qpel((*step)[0]);
    const std::int32_t d_tr_h = quantize_step_qpel((*step)[1]);
    const std::int32_t d_tl_v = quantize_step_qpel((*step)[2]);
    const std::int32_t d_tr_v = quantize_step_qpel((*step)[3]);
    if (d_tl_h == 0 && d_tr_h == 0 && d_tl_v == 0 && d_tr_v == 0) {
      best.converged = true;
      return best;
    }

    model.mv_tl = clamp_mv({model.mv_tl.hor + d_tl_h, model.mv_tl.ver + d_tl_v,
                            MvPrec::QuarterPel}, bound);
    model.mv_tr = clamp_mv({model.mv_tr.hor + d_tr_h, model.mv_tr.ver + d_tr_v,
                            MvPrec::QuarterPel}, bound);
  }

  // Give the final update a chance before returning the best model seen.
  const PelBlock apron = predict_luma_with_apron(ref, pu_x, pu_y, pu_size, model, bank);
  const std::uint64_t cost = block_sse_from_apron(cur, pu_x, pu_y, apron);
  if (cost < best.sse) {
    best.sse = cost;
    best.model = model;
  }
  return best;
}

namespace {

std::uint64_t sse_at_mv(const Plane& cur, const Plane& ref, int x, int y, int size,
                        const MotionVector& mv_qpel, const FilterBank& bank) {
  std::uint64_t dummy = 0;
  McUnit unit{x, y, size, size, to_sixty_fourth(mv_qpel)};
  const PelBlock pred = interpolate_unit(ref, unit, bank, FilterBank::kLumaTaps, dummy);
  return sse(cur, x, y, pred);
}

}  // namespace

TranslationalResult translational_search(const Plane& cur, const Plane& ref, int pu_x,
                                         int pu_y, int pu_size, const MotionVector& start,
                                         const FilterBank& bank, const SearchConfig& cfg) {
  const std::int32_t bound = cfg.range * 4;
  const MotionVector s = clamp_mv(start, bound);

  // Integer-pel diamond search on SAD: expanding 8-point diamonds around the
  // start (and the zero MV) pick a basin, then small-diamond descent walks to
  // the local minimum. Only strict improvements move, so ties stay at the
  // start.
  int cx = static_cast<int>(round_half_away(s.hor, 4));
  int cy = static_cast<int>(round_half_away(s.ver, 4));
  const auto sad_at = [&](int mx, int my) {
    return sad(cur, pu_x, pu_y, ref, pu_x + mx, pu_y + my, pu_size, pu_size);
  };
  std::uint64_t best_sad = sad_at(cx, cy);
  const auto consider = [&](int mx, int my) {
    if (std::abs(mx) > cfg.range || std::abs(my) > cfg.range) {
      return;
    }
    const std::uint64_t c = sad_at(mx, my);
    if (c < best_sad) {
      best_sad = c;
      cx = mx;
      cy = my;
    }
  };

  consider(0, 0);
  const int sx = cx;
  const int sy = cy;
  for (int radius = 1; radius <= cfg.range; radius *= 2) {
    const int half = radius / 2;
    consider(sx + radius, sy);
    consider(sx - radius, sy);
    consider(sx, sy + radius);
    consider(sx, sy - radius);
    if (half > 0) {
      consider(sx + half, sy + half);
      consider(sx + half, sy - half);
      consider(sx - half, sy + half);
      consider(sx - half, sy - half);
    }
  }

  for (;;) {
    const int px = cx;
    const int py = cy;
    consider(px + 1, py);
    consider(px - 1, py);
    consider(px, py + 1);
    consider(px, py - 1);
    if (px == cx && py == cy) {
      break;
    }
  }

  // Fractional refinement by SSE: half-pel then quarter-pel 3x3.
  TranslationalResult best;
  best.mv = {cx * 4, cy * 4, MvPrec::QuarterPel};
  best.sse = sse_at_mv(cur, ref, pu_x, pu_y, pu_size, best.mv, bank);
  for (const int step : {2, 1}) {
    const MotionVector center = best.mv;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) {
          continue;
        }
        MotionVector mv{center.hor + dx * step, center.ver + dy * step, MvPrec::QuarterPel};
        mv = clamp_mv(mv, bound);
        const std::uint64_t c = sse_at_mv(cur, ref, pu_x, pu_y, pu_size, mv, bank);
        if (c < best.sse) {
          best.sse = c;
          best.mv = mv;
        }
      }
    }
  }
  return best;
}

OracleResult brute_force_affine_oracle(const Plane& cur, const Plane& ref, int pu_x,
                                       int pu_y, int pu_size, const AffineModel& center,
                                       int radius_qpel, const FilterBank& bank) {
  if (radius_qpel < 0 || radius_qpel > 4) {
    throw std::invalid_argument("brute_force_affine_oracle: radius must be 0..4");
  }
  validate_model(center);

  OracleResult best;
  best.sse = UINT64_MAX;
  std::int64_t best_l1 = INT64_MAX;
  std::array<int, 4> best_delta{};

  const int r = radius_qpel;
  for (int d_tl_h = -r; d_tl_h <= r; ++d_tl_h) {
    for (int d_tl_v = -r; d_tl_v <= r; ++d_tl_v) {
      for (int d_tr_h = -r; d_tr_h <= r; ++d_tr_h) {
        for (int d_tr_v = -r; d_tr_v <= r; ++d_tr_v) {
          AffineModel m = center;
          m.mv_tl = {center.mv_tl.hor + d_tl_h, center.mv_tl.ver + d_tl_v,
                     MvPrec::QuarterPel};
          m.mv_tr = {center.mv_tr.hor + d_tr_h, center.mv_tr.ver + d_tr_v,
                     MvPrec::QuarterPel};
          const PelBlock pred = predict_luma_pixel_exact(ref, pu_x, pu_y, pu_size, m, bank);
          const std::uint64_t c = sse(cur, pu_x, pu_y, pred);
          const std::int64_t l1 = std::abs(d_tl_h) + std::abs(d_tl_v) + std::abs(d_tr_h) +
                                  std::abs(d_tr_v);
          const std::array<int, 4> delta{d_tl_h, d_tl_v, d_tr_h, d_tr_v};
          if (c < best.sse || (c == best.sse && (l1 < best_l1 ||
                               (l1 == best_l1 && delta < best_delta)))) {
            best.sse = c;
            best.model = m;
            best_l1 = l1;
            best_delta = delta;
          }
        }
      }
    }
  }
  return best;
}

}  // namespace affinemc
