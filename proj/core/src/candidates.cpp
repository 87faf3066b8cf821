#include "affinemc/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace affinemc {

std::int64_t dmv_score(const MotionVector& mvp0, const MotionVector& mvp1,
                       const MotionVector& mvp2) {
  if (mvp0.prec != mvp1.prec || mvp0.prec != mvp2.prec) {
    throw std::invalid_argument("dmv_score: precision mismatch");
  }
  const std::int64_t top = (mvp1.hor - mvp0.hor) - (mvp2.ver - mvp0.ver);
  const std::int64_t left = (mvp0.ver - mvp1.ver) - (mvp2.hor - mvp0.hor);
  return std::abs(top) + std::abs(left);
}

NeighborGrid::NeighborGrid(int frame_width, int frame_height)
    : width_(frame_width), height_(frame_height),
      cells_x_((frame_width + 3) / 4), cells_y_((frame_height + 3) / 4),
      cells_(static_cast<std::size_t>(cells_x_) * cells_y_) {
  if (frame_width <= 0 || frame_height <= 0) {
    throw std::invalid_argument("NeighborGrid: dimensions must be positive");
  }
}

void NeighborGrid::commit_translational(int x, int y, int size, const MotionVector& mv) {
  for (int py = y; py < y + size; py += 4) {
    for (int px = x; px < x + size; px += 4) {
      Cell& c = cell(px, py);
      c.coded = true;
      c.affine = false;
      c.mv = mv;
    }
  }
}

void NeighborGrid::commit_affine(int x, int y, int size, const AffineModel& model) {
  AffineNeighbor pu;
  pu.x_tl = x;
  pu.y_tl = y;
  pu.x_tr = x + size - 1;
  pu.y_tr = y;
  pu.x_bl = x;
  pu.y_bl = y + size - 1;
  pu.mv_tl = model.mv_tl;
  pu.mv_tr = model.mv_tr;
  pu.mv_bl = derived_third_corner(model);

  for (int py = y; py < y + size; py += 4) {
    for (int px = x; px < x + size; px += 4) {
      Cell& c = cell(px, py);
      c.coded = true;
      c.affine = true;
      // Cell MV: the model field at the cell center, quarter-pel.
      c.mv = to_quarter(mv_at(model, px - x + 2, py - y + 2));
      c.pu = pu;
    }
  }
}

void NeighborGrid::clear_area(int x, int y, int size) {
  for (int py = y; py < y + size; py += 4) {
    for (int px = x; px < x + size; px += 4) {
      cell(px, py) = Cell{};
    }
  }
}

bool NeighborGrid::coded_at(int px, int py) const {
  return in_frame(px, py) && cell(px, py).coded;
}

bool NeighborGrid::affine_at(int px, int py) const {
  return coded_at(px, py) && cell(px, py).affine;
}

std::optional<MotionVector> NeighborGrid::mv_at_pixel(int px, int py) const {
  if (!coded_at(px, py)) {
    return std::nullopt;
  }
  return cell(px, py).mv;
}

std::optional<AffineNeighbor> NeighborGrid::affine_neighbor_at(int px, int py) const {
  if (!affine_at(px, py)) {
    return std::nullopt;
  }
  return cell(px, py).pu;
}

MotionVector translational_predictor(const NeighborGrid& grid, int x, int y, int size) {
  const MotionVector zero{0, 0, MvPrec::QuarterPel};
  const MotionVector left = grid.mv_at_pixel(x - 1, y).value_or(zero);
  const MotionVector above = grid.mv_at_pixel(x, y - 1).value_or(zero);
  const MotionVector above_right = grid.mv_at_pixel(x + size, y - 1).value_or(zero);
  const auto med3 = [](std::int32_t a, std::int32_t b, std::int32_t c) {
    return std::max(std::min(a, b), std::min(std::max(a, b), c));
  };
  return {med3(left.hor, above.hor, above_right.hor),
          med3(left.ver, above.ver, above_right.ver), MvPrec::QuarterPel};
}

namespace {

struct PoolEntry {
  MotionVector mv;
  char tag;
};

void push_unique(std::vector<PoolEntry>& pool, const std::optional<MotionVector>& mv,
                 char tag) {
  if (!mv) {
    return;
  }
  for (const PoolEntry& e : pool) {
    if (e.mv == *mv) {
      return;
    }
  }
  pool.push_back({*mv, tag});
}

}  // namespace

std::array<CandidateTuple, 2> aamvp_candidates(const NeighborGrid& grid, int x, int y,
                                               int size) {
  const int x_tr = x + size - 1;
  const int y_bl = y + size - 1;

  std::vector<PoolEntry> pool0;  // around the top-left corner
  push_unique(pool0, grid.mv_at_pixel(x - 1, y - 1), 'A');
  push_unique(pool0, grid.mv_at_pixel(x, y - 1), 'B');
  push_unique(pool0, grid.mv_at_pixel(x - 1, y), 'C');

  std::vector<PoolEntry> pool1;  // around the top-right corner
  push_unique(pool1, grid.mv_at_pixel(x_tr, y - 1), 'D');
  push_unique(pool1, grid.mv_at_pixel(x_tr + 1, y - 1), 'E');

  std::vector<PoolEntry> pool2;  // around the bottom-left corner
  push_unique(pool2, grid.mv_at_pixel(x - 1, y_bl), 'F');
  push_unique(pool2, grid.mv_at_pixel(x - 1, y_bl + 1), 'G');

  // Componentwise separation bound: half the block size, in quarter-pel.
  const std::int32_t max_sep = size * 2;

  std::vector<CandidateTuple> list;
  for (const PoolEntry& p0 : pool0) {
    for (const PoolEntry& p1 : pool1) {
      if (p0.mv == p1.mv) {
        continue;
      }
      if (std::abs(p0.mv.hor - p1.mv.hor) > max_sep ||
          std::abs(p0.mv.ver - p1.mv.ver) > max_sep) {
        continue;
      }
      CandidateTuple t;
      t.mvp0 = p0.mv;
      t.mvp1 = p1.mv;
      t.source = std::string{p0.tag} + "+" + p1.tag;
      t.dmv = 0;
      if (!pool2.empty()) {
        std::int64_t best = INT64_MAX;
        for (const PoolEntry& p2 : pool2) {
          best = std::min(best, dmv_score(p0.mv, p1.mv, p2.mv));
        }
        t.dmv = best;
      }
      list.push_back(t);
    }
  }
  std::stable_sort(list.begin(), list.end(),
                   [](const CandidateTuple& a, const CandidateTuple& b) {
                     return a.dmv < b.dmv;
                   });
  if (list.size() > 2) {
    list.resize(2);
  }
  if (list.size() < 2) {
    CandidateTuple fill;
    fill.mvp0 = fill.mvp1 = translational_predictor(grid, x, y, size);
    fill.source = "fill-trans";
    list.push_back(fill);
  }
  if (list.size() < 2) {
    CandidateTuple zero;
    zero.mvp0 = zero.mvp1 = {0, 0, MvPrec::QuarterPel};
    zero.source = "fill-zero";
    list.push_back(zero);
  }
  return {list[0], list[1]};
}

std::optional<AffineNeighbor> amm_scan(const NeighborGrid& grid, int x, int y, int size) {
  const struct {
    int px;
    int py;
  } order[5] = {
      {x - 1, y + size - 1},  // left
      {x + size - 1, y - 1},  // above
      {x + size, y - 1},      // above-right
      {x - 1, y + size},      // below-left
      {x - 1, y - 1},         // above-left
  };
  for (const auto& pos : order) {
    if (auto nb = grid.affine_neighbor_at(pos.px, pos.py)) {
      return nb;
    }
  }
  return std::nullopt;
}

AffineModel amm_derive(int x, int y, int size, const AffineNeighbor& nb) {
  const std::int64_t dy_corners = nb.y_bl - nb.y_tl;
  const std::int64_t dx_corners = nb.x_tr - nb.x_tl;
  if (dy_corners == 0 || dx_corners == 0) {
    throw std::invalid_argument("amm_derive: degenerate neighbor geometry");
  }

  // mv_tl = nb.mv_tr + (y_tr - y0) * (mv_bl - mv_tl) / (y_bl - y_tl), kept as
  // an exact rational until the final quarter-pel rounding; mv_tr adds the
  // horizontal ramp over the PU width on a common denominator.
  const std::int64_t dy = nb.y_tr - y;
  const std::int64_t tl_num_h = std::int64_t{nb.mv_tr.hor} * dy_corners +
                                dy * (nb.mv_bl.hor - nb.mv_tl.hor);
  const std::int64_t tl_num_v = std::int64_t{nb.mv_tr.ver} * dy_corners +
                                dy * (nb.mv_bl.ver - nb.mv_tl.ver);

  const std::int64_t dx = (x + size - 1) - x;  // x1 - x0
  const std::int64_t tr_num_h = tl_num_h * dx_corners +
                                dx * (std::int64_t{nb.mv_tr.hor} - nb.mv_tl.hor) * dy_corners;
  const std::int64_t tr_num_v = tl_num_v * dx_corners +
                                dx * (std::int64_t{nb.mv_tr.ver} - nb.mv_tl.ver) * dy_corners;

  AffineModel m;
  m.mv_tl = {static_cast<std::int32_t>(round_half_away(tl_num_h, dy_corners)),
             static_cast<std::int32_t>(round_half_away(tl_num_v, dy_corners)),
             MvPrec::QuarterPel};
  m.mv_tr = {static_cast<std::int32_t>(round_half_away(tr_num_h, dy_corners * dx_corners)),
             static_cast<std::int32_t>(round_half_away(tr_num_v, dy_corners * dx_corners)),
             MvPrec::QuarterPel};
  m.width = size;
  m.org_x = x;
  m.org_y = y;
  return m;
}

}  // namespace affinemc
