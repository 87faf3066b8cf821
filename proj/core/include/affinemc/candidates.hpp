#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "affinemc/affine_model.hpp"
#include "affinemc/motion_vector.hpp"

namespace affinemc {

/// Consistency score of an (mvp0, mvp1) pair against a bottom-left predictor
/// mvp2 under the four-parameter corner relations; 0 means the triple is
/// exactly consistent with one model. All MVs quarter-pel.
std::int64_t dmv_score(const MotionVector& mvp0, const MotionVector& mvp1,
                       const MotionVector& mvp2);

/// A corner-MV-pair predictor with its score and provenance.
struct CandidateTuple {
  MotionVector mvp0;
  MotionVector mvp1;
  std::int64_t dmv = 0;
  std::string source;  // e.g. "B+D", "fill-trans", "fill-zero"
};

/// Corner geometry of an affine neighbor PU: top-left, top-right and
/// bottom-left pixel coordinates with their quarter-pel MVs.
struct AffineNeighbor {
  int x_tl = 0, y_tl = 0;
  int x_tr = 0, y_tr = 0;
  int x_bl = 0, y_bl = 0;
  MotionVector mv_tl;
  MotionVector mv_tr;
  MotionVector mv_bl;
};

/// Minimal-4x4-cell map of the already-coded area. Each coded cell exposes a
/// translational MV (the owning PU's MV, or the model field sampled at the
/// cell center for affine PUs) plus the owning PU's corner data when affine.
class NeighborGrid {
 public:
  NeighborGrid() = default;
  NeighborGrid(int frame_width, int frame_height);

  int cells_x() const { return cells_x_; }
  int cells_y() const { return cells_y_; }

  /// Marks the square PU at (x,y) as coded with a translational MV.
  void commit_translational(int x, int y, int size, const MotionVector& mv);

  /// Marks the square PU as coded in affine mode.
  void commit_affine(int x, int y, int size, const AffineModel& model);

  /// Reverts an area to un-coded (quadtree backtracking).
  void clear_area(int x, int y, int size);

  bool coded_at(int px, int py) const;
  bool affine_at(int px, int py) const;

  /// Cell MV at the cell containing pixel (px,py); nullopt when the position
  /// is outside the frame or not yet coded (or would be intra — inter-only
  /// here, but the availability check stays).
  std::optional<MotionVector> mv_at_pixel(int px, int py) const;

  /// Owning PU's affine corner data for the cell containing (px,py).
  std::optional<AffineNeighbor> affine_neighbor_at(int px, int py) const;

 private:
  struct Cell {
    bool coded = false;
    bool affine = false;
    MotionVector mv;
    AffineNeighbor pu;
  };

  bool in_frame(int px, int py) const {
    return px >= 0 && px < width_ && py >= 0 && py < height_;
  }
  const Cell& cell(int px, int py) const {
    return cells_[static_cast<std::size_t>(py / 4) * cells_x_ + (px / 4)];
  }
  Cell& cell(int px, int py) {
    return cells_[static_cast<std::size_t>(py / 4) * cells_x_ + (px / 4)];
  }

  int width_ = 0;
  int height_ = 0;
  int cells_x_ = 0;
  int cells_y_ = 0;
  std::vector<Cell> cells_;
};

/// Median-of-{left, above, above-right} translational predictor for the PU at
/// (x,y); unavailable neighbors count as zero MVs.
MotionVector translational_predictor(const NeighborGrid& grid, int x, int y, int size);

/// Builds the two-entry AAMVP candidate list for the PU: spatial pools
/// {above-left, above, left} for mvp0, {above of TR, above-right} for mvp1 and
/// {left of BL, below-left} for mvp2; pairs filtered by mvp0 != mvp1 and a
/// componentwise half-block-size separation bound, ranked by best DMV over the
/// mvp2 pool, then padded with the translational predictor and the zero tuple.
std::array<CandidateTuple, 2> aamvp_candidates(const NeighborGrid& grid, int x, int y,
                                               int size);

/// First affine neighbor in merge order left, above, above-right, below-left,
/// above-left; nullopt means AMM is skipped for this PU.
std::optional<AffineNeighbor> amm_scan(const NeighborGrid& grid, int x, int y, int size);

/// Derives the current PU's model from a neighbor's corner MVs: the top-left
/// MV comes from the neighbor's top-right corner shifted by the vertical MV
/// ramp, the top-right MV adds the horizontal ramp over the PU width. Exact
/// rational arithmetic, single final quarter-pel rounding per component.
AffineModel amm_derive(int x, int y, int size, const AffineNeighbor& nb);

}  // namespace affinemc
