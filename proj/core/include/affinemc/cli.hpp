#pragma once

#include <string>

#include "affinemc/encoder.hpp"

namespace affinemc {

/// Batch run configuration; every field maps 1:1 onto a CLI flag and a
/// key=value config-file entry (flags win).
struct RunConfig {
  std::string input;
  int width = 0;
  int height = 0;
  int frames = 2;
  int qp = 27;
  int range = 64;
  bool no_affine = false;
  bool no_amm = false;
  bool pixel_mc = false;
  bool two_step_filter = false;
  std::string out_dir = ".";
};

struct SynthConfig {
  std::string base;  // YUV file whose frame 0 seeds the sequence
  int width = 0;
  int height = 0;
  double theta = 0.0;  // per-frame rotation step, radians
  double rho = 1.0;    // per-frame zoom step
  double tx = 0.0;     // per-frame translation step, pixels
  double ty = 0.0;
  int count = 2;
  std::string out;  // output YUV path; the truth sidecar lands at out + ".truth"
};

/// Writes `count` progressively warped frames (frame k carries the cumulative
/// warp k*theta, rho^k, k*tx, k*ty against frame 0) plus the ground-truth
/// sidecar. Returns the sidecar path.
std::string cmd_synth(const SynthConfig& cfg);

/// Predicts frames 1..frames-1 each from its predecessor and writes
/// stats.csv, pred.yuv, and per-frame mode/partition PGM maps into out_dir.
void cmd_predict(const RunConfig& cfg);

/// Dumps the generated 64-phase tap table ({4,8} taps) as CSV.
void cmd_filters(int taps, const std::string& out_path);

/// Loads a flat key=value config file ('#' starts a comment) whose keys are
/// the long flag names. Values already set by flags stay authoritative
/// because the command line is parsed after the file is applied. Unknown
/// keys are config errors.
void apply_config_file(RunConfig& cfg, const std::string& path);
void apply_config_file(SynthConfig& cfg, const std::string& path);

}  // namespace affinemc
