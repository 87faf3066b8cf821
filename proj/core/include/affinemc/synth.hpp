#pragma once

#include <string>
#include <vector>

#include "affinemc/frame.hpp"
#include "affinemc/motion_vector.hpp"

namespace affinemc {

/// Forward warp parameters: each source pixel (x,y) maps to
///   x' = rho*cos(theta)*x + rho*sin(theta)*y + tx
///   y' = -rho*sin(theta)*x + rho*cos(theta)*y + ty
/// so the induced MV field at (x,y) is (x'-x, y'-y), i.e. the
/// four-parameter model with a = rho*cos(theta)-1, b = rho*sin(theta).
struct WarpParams {
  double theta = 0.0;  // radians, |theta| <= pi/4
  double rho = 1.0;    // zoom factor, in [0.5, 2]
  double tx = 0.0;     // pixels
  double ty = 0.0;     // pixels
};

/// Renders the warped companion of `base`: output(x,y) samples base at the
/// warp image of (x,y) with a 6-tap windowed-sinc resampler (deliberately a
/// different filter family than the codec's interpolation so comparisons are
/// not self-confirming). Out-of-frame source positions take edge-replicated
/// values. Integer translations reproduce base samples exactly.
Frame synth_affine_pair(const Frame& base, const WarpParams& warp);

/// Ground-truth displacement of pixel (x,y) under `warp`, in pixels.
void warp_truth_pixels(const WarpParams& warp, double x, double y,
                       double& mv_hor, double& mv_ver);

/// Ground-truth quarter-pel corner MVs of the block at (org_x, org_y) with
/// the given width, rounded half-away-from-zero.
void warp_truth_corner_mvs(const WarpParams& warp, int org_x, int org_y, int width,
                           MotionVector& mv_tl, MotionVector& mv_tr);

/// Per-frame ground truth written next to a synthesized sequence.
struct TruthRecord {
  int poc = 0;
  WarpParams warp;  // cumulative warp from POC 0
};

void write_truth_sidecar(const std::vector<TruthRecord>& records, const std::string& path);
std::vector<TruthRecord> read_truth_sidecar(const std::string& path);

}  // namespace affinemc
