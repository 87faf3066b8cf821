#include "affinemc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace affinemc {

namespace {

// Lanczos-3 kernel: sinc(t)*sinc(t/3) for |t| < 3.
double lanczos3(double t) {
  t = std::abs(t);
  if (t < 1e-12) {
    return 1.0;
  }
  if (t >= 3.0) {
    return 0.0;
  }
  const double pt = std::numbers::pi * t;
  return 3.0 * std::sin(pt) * std::sin(pt / 3.0) / (pt * pt);
}

// Samples a padded plane at a fractional position with the separable 6-tap
// windowed sinc. Positions beyond the margin are clamped, which reduces to
// edge replication because the margin itself is edge-replicated.
double resample(const Plane& p, double sx, double sy) {
  const double lo_x = -p.margin() + 3.0;
  const double hi_x = p.width() - 1.0 + p.margin() - 3.0;
  const double lo_y = -p.margin() + 3.0;
  const double hi_y = p.height() - 1.0 + p.margin() - 3.0;
  sx = std::clamp(sx, lo_x, hi_x);
  sy = std::clamp(sy, lo_y, hi_y);

  const int ix = static_cast<int>(std::floor(sx));
  const int iy = static_cast<int>(std::floor(sy));
  const double fx = sx - ix;
  const double fy = sy - iy;

  double wx[6];
  double wy[6];
  double sum_x = 0.0;
  double sum_y = 0.0;
  for (int i = 0; i < 6; ++i) {
    wx[i] = lanczos3((i - 2) - fx);
    wy[i] = lanczos3((i - 2) - fy);
    sum_x += wx[i];
    sum_y += wy[i];
  }
  for (int i = 0; i < 6; ++i) {
    wx[i] /= sum_x;
    wy[i] /= sum_y;
  }

  double acc = 0.0;
  for (int j = 0; j < 6; ++j) {
    double row = 0.0;
    for (int i = 0; i < 6; ++i) {
      row += wx[i] * p.at(ix - 2 + i, iy - 2 + j);
    }
    acc += wy[j] * row;
  }
  return acc;
}

std::uint8_t to_pel(double v) {
  const int r = static_cast<int>(std::lround(v));
  return static_cast<std::uint8_t>(std::clamp(r, 0, 255));
}

void warp_plane(const Plane& src, Plane& dst, const WarpParams& w, double translate_scale) {
  const double ca = w.rho * std::cos(w.theta);
  const double sa = w.rho * std::sin(w.theta);
  const double tx = w.tx * translate_scale;
  const double ty = w.ty * translate_scale;
  for (int y = 0; y < dst.height(); ++y) {
    for (int x = 0; x < dst.width(); ++x) {
      const double sx = ca * x + sa * y + tx;
      const double sy = -sa * x + ca * y + ty;
      dst.at(x, y) = to_pel(resample(src, sx, sy));
    }
  }
}

}  // namespace

Frame synth_affine_pair(const Frame& base, const WarpParams& warp) {
  if (warp.rho < 0.5 || warp.rho > 2.0) {
    throw std::invalid_argument("synth_affine_pair: rho must be in [0.5, 2]");
  }
  if (std::abs(warp.theta) > std::numbers::pi / 4.0 + 1e-12) {
    throw std::invalid_argument("synth_affine_pair: |theta| must be <= pi/4");
  }
  Frame out(base.width(), base.height(), base.poc + 1);
  warp_plane(base.y, out.y, warp, 1.0);
  warp_plane(base.cb, out.cb, warp, 0.5);
  warp_plane(base.cr, out.cr, warp, 0.5);
  out.pad();
  return out;
}

void warp_truth_pixels(const WarpParams& warp, double x, double y,
                       double& mv_hor, double& mv_ver) {
  const double ca = warp.rho * std::cos(warp.theta);
  const double sa = warp.rho * std::sin(warp.theta);
  mv_hor = ca * x + sa * y + warp.tx - x;
  mv_ver = -sa * x + ca * y + warp.ty - y;
}

void warp_truth_corner_mvs(const WarpParams& warp, int org_x, int org_y, int width,
                           MotionVector& mv_tl, MotionVector& mv_tr) {
  const auto q = [](double pel) {
    const double v = pel * 4.0;
    return static_cast<std::int32_t>(v >= 0 ? std::floor(v + 0.5) : std::ceil(v - 0.5));
  };
  double h = 0.0;
  double v = 0.0;
  warp_truth_pixels(warp, org_x, org_y, h, v);
  mv_tl = {q(h), q(v), MvPrec::QuarterPel};
  warp_truth_pixels(warp, org_x + width - 1, org_y, h, v);
  mv_tr = {q(h), q(v), MvPrec::QuarterPel};
}

void write_truth_sidecar(const std::vector<TruthRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw std::runtime_error("write_truth_sidecar: cannot open " + path);
  }
  out << "poc theta rho tx ty\n";
  out.precision(17);
  for (const TruthRecord& r : records) {
    out << r.poc << " " << r.warp.theta << " " << r.warp.rho << " " << r.warp.tx << " "
        << r.warp.ty << "\n";
  }
  if (!out) {
    throw std::runtime_error("write_truth_sidecar: write failed for " + path);
  }
}

std::vector<TruthRecord> read_truth_sidecar(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("read_truth_sidecar: cannot open " + path);
  }
  std::string header;
  std::getline(in, header);
  std::vector<TruthRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::istringstream ss(line);
    TruthRecord r;
    if (!(ss >> r.poc >> r.warp.theta >> r.warp.rho >> r.warp.tx >> r.warp.ty)) {
      throw std::runtime_error("read_truth_sidecar: malformed line in " + path);
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace affinemc
