#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "affinemc/affine_model.hpp"
#include "affinemc/candidates.hpp"
#include "affinemc/filter_bank.hpp"
#include "affinemc/frame.hpp"
#include "affinemc/metrics.hpp"
#include "affinemc/motion_comp.hpp"
#include "affinemc/motion_search.hpp"

namespace affinemc {

enum class PuMode {
  Translational,
  AffineAamvp,
  AffineAmm,
  AmmSkip,
};

const char* pu_mode_name(PuMode mode);

struct EncodeConfig {
  int qp = 27;
  int range = 64;         // search range, pixels
  bool enable_affine = true;
  bool enable_amm = true;
  bool pixel_based_mc = false;     // emit with the pixel-based MC oracle path
  bool two_step_filter = false;    // emit with the legacy two-step filter
  int max_iters_affine = 6;
};

/// One evaluated alternative at a quadtree node, for dominance checks.
struct ModeTrial {
  PuMode mode;
  double cost = 0.0;
};

struct PredictionUnit {
  int x = 0;
  int y = 0;
  int size = 0;
  PuMode mode = PuMode::Translational;
  MotionVector mv;     // translational mode
  AffineModel model;   // affine modes
  std::uint64_t sse_luma = 0;  // block-based MC distortion used by the decision
  int bits = 0;
  double cost = 0.0;
  int me_iterations = 0;  // AAMVP mode only
  bool me_converged = false;
  std::vector<ModeTrial> trials;  // every alternative evaluated at this node

  bool is_affine() const { return mode != PuMode::Translational; }
};

struct FrameStats {
  int poc = 0;
  int pu_count = 0;
  std::uint64_t area_translational = 0;
  std::uint64_t area_aamvp = 0;
  std::uint64_t area_amm = 0;
  std::uint64_t area_amm_skip = 0;
  std::uint64_t area_affine_nonborder = 0;
  std::uint64_t area_nonborder = 0;
  std::uint64_t total_bits = 0;
  double total_cost = 0.0;
  std::uint64_t sse_y = 0;
  std::uint64_t sse_cb = 0;
  std::uint64_t sse_cr = 0;
  PlanePsnr psnr;
  int me_runs = 0;
  std::uint64_t me_iterations = 0;
  int me_converged = 0;
  McTelemetry mc;

  std::uint64_t area_affine() const { return area_aamvp + area_amm + area_amm_skip; }
  std::uint64_t area_total() const { return area_translational + area_affine(); }
};

/// Leaf-vs-split outcome at one quadtree node.
struct NodeDecision {
  int x = 0;
  int y = 0;
  int size = 0;
  double leaf_cost = 0.0;
  double split_cost = -1.0;  // negative when the node could not split
  bool split_chosen = false;
};

struct EncodeResult {
  Frame prediction;
  std::vector<PredictionUnit> pus;
  std::vector<NodeDecision> decisions;
  FrameStats stats;
};

/// Predicts `cur` from `ref` with the quadtree mode-decision harness:
/// 64x64 roots in raster order, recursive leaf-vs-split comparison down to
/// 8x8, and per-node RD choice among translational search, affine AAMVP
/// (gradient ME) and AMM. Dimensions must be multiples of 8.
EncodeResult encode_frame(const Frame& cur, const Frame& ref, const EncodeConfig& cfg,
                          const FilterBank& bank);

/// Gray-level mode map (one level per mode) at full luma resolution.
Plane render_mode_map(const EncodeResult& result, int width, int height);

/// Prediction luma with PU borders painted white.
Plane render_partition_map(const EncodeResult& result);

/// stats.csv column header and one row per frame.
std::string stats_csv_header();
std::string stats_csv_row(const FrameStats& stats);

}  // namespace affinemc
