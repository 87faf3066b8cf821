#pragma once

#include <cstdint>

#include "affinemc/affine_model.hpp"
#include "affinemc/filter_bank.hpp"
#include "affinemc/frame.hpp"
#include "affinemc/motion_vector.hpp"

namespace affinemc {

struct SearchConfig {
  int range = 64;            // pixels
  int max_iters_affine = 6;  // uni-directional Gauss-Newton budget
  double lambda = 16.0;      // RD multiplier (used by the harness)
};

struct AffineMeResult {
  AffineModel model;
  std::uint64_t sse = 0;
  int iterations = 0;
  bool converged = false;  // corner-MV update quantized to zero
};

/// Gradient-based affine ME: iterates pixel-exact motion compensation,
/// Sobel gradients of the prediction, a 4x4 normal-equation solve, and a
/// quarter-pel-quantized corner-MV update, keeping the best-SSE model seen.
/// Stops when all four update components quantize to zero, on a singular
/// system, or after max_iters_affine iterations.
AffineMeResult affine_me(const Plane& cur, const Plane& ref, int pu_x, int pu_y,
                         int pu_size, const AffineModel& start, const FilterBank& bank,
                         const SearchConfig& cfg);

struct TranslationalResult {
  MotionVector mv;  // quarter-pel
  std::uint64_t sse = 0;
};

/// Integer-pel small-diamond descent to a local SAD minimum, then half-pel
/// and quarter-pel 3x3 refinements by SSE. Ties keep the incumbent.
TranslationalResult translational_search(const Plane& cur, const Plane& ref, int pu_x,
                                         int pu_y, int pu_size, const MotionVector& start,
                                         const FilterBank& bank, const SearchConfig& cfg);

struct OracleResult {
  AffineModel model;
  std::uint64_t sse = 0;
};

/// Exhaustive corner-MV search within +/-radius quarter-pel of `center` on
/// the pixel-exact MC path; the global SSE minimum with deterministic
/// tie-breaking (smallest |delta| L1 sum, then lexicographic). Test oracle,
/// O((2r+1)^4) — radius is capped at 4.
OracleResult brute_force_affine_oracle(const Plane& cur, const Plane& ref, int pu_x,
                                       int pu_y, int pu_size, const AffineModel& center,
                                       int radius_qpel, const FilterBank& bank);

}  // namespace affinemc
