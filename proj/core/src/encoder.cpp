#include "affinemc/encoder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "affinemc/motion_comp.hpp"
#include "affinemc/rd.hpp"

namespace affinemc {

const char* pu_mode_name(PuMode mode) {
  switch (mode) {
    case PuMode::Translational: return "translational";
    case PuMode::AffineAamvp: return "affine_aamvp";
    case PuMode::AffineAmm: return "affine_amm";
    case PuMode::AmmSkip: return "amm_skip";
  }
  return "?";
}

namespace {

struct NodeResult {
  double cost = 0.0;
  std::vector<PredictionUnit> pus;
};

class FrameEncoder {
 public:
  FrameEncoder(const Frame& cur, const Frame& ref, const EncodeConfig& cfg,
               const FilterBank& bank)
      : cur_(cur), ref_(ref), cfg_(cfg), bank_(bank),
        lambda_(lambda_from_qp(cfg.qp)), grid_(cur.width(), cur.height()) {
    scfg_.range = cfg.range;
    scfg_.max_iters_affine = cfg.max_iters_affine;
    scfg_.lambda = lambda_;
  }

  EncodeResult run();

 private:
  NodeResult encode_node(int x, int y, int size);
  PredictionUnit evaluate_leaf(int x, int y, int size);
  void commit_pu(const PredictionUnit& pu);
  std::uint64_t block_sse_block_based(const AffineModel& model, int x, int y, int size);

  const Frame& cur_;
  const Frame& ref_;
  const EncodeConfig& cfg_;
  const FilterBank& bank_;
  double lambda_;
  SearchConfig scfg_;
  NeighborGrid grid_;
  std::vector<NodeDecision> decisions_;
};

std::uint64_t FrameEncoder::block_sse_block_based(const AffineModel& model, int x, int y,
                                                  int size) {
  // Decisions always run on the adaptive block-size one-step path; the
  // pixel-mc / two-step toggles only change the emission.
  McTelemetry t;
  const PredBlock pred = motion_compensate_affine(ref_, x, y, size, model, bank_, t);
  return sse(cur_.y, x, y, pred.luma);
}

PredictionUnit FrameEncoder::evaluate_leaf(int x, int y, int size) {
  const std::int32_t bound = cfg_.range * 4;

  const MotionVector med = clamp_mv(translational_predictor(grid_, x, y, size), bound);
  const TranslationalResult tr =
      translational_search(cur_.y, ref_.y, x, y, size, med, bank_, scfg_);

  PredictionUnit best;
  best.x = x;
  best.y = y;
  best.size = size;
  best.mode = PuMode::Translational;
  best.mv = tr.mv;
  best.sse_luma = tr.sse;
  best.bits = bits_translational({tr.mv.hor - med.hor, tr.mv.ver - med.ver,
                                  MvPrec::QuarterPel});
  best.cost = rd_cost(tr.sse, best.bits, lambda_);
  best.trials.push_back({PuMode::Translational, best.cost});

  if (!cfg_.enable_affine) {
    return best;
  }

  // AAMVP: start from the best of the candidate tuples and the replicated
  // translational MV, refine with gradient ME.
  const std::array<CandidateTuple, 2> cands = aamvp_candidates(grid_, x, y, size);
  AffineModel start;
  std::uint64_t start_sse = UINT64_MAX;
  for (int i = 0; i < 3; ++i) {
    AffineModel m;
    if (i < 2) {
      m.mv_tl = clamp_mv(cands[i].mvp0, bound);
      m.mv_tr = clamp_mv(cands[i].mvp1, bound);
    } else {
      m.mv_tl = m.mv_tr = tr.mv;
    }
    m.width = size;
    m.org_x = x;
    m.org_y = y;
    const PelBlock pred = predict_luma_pixel_exact(ref_.y, x, y, size, m, bank_);
    const std::uint64_t s = sse(cur_.y, x, y, pred);
    if (s < start_sse) {
      start_sse = s;
      start = m;
    }
  }

  const AffineMeResult me = affine_me(cur_.y, ref_.y, x, y, size, start, bank_, scfg_);
  AffineModel model = me.model;
  model.org_x = x;
  model.org_y = y;

  const std::uint64_t sse_aamvp = block_sse_block_based(model, x, y, size);
  int bits_aamvp = INT32_MAX;
  for (const CandidateTuple& c : cands) {
    const int b = bits_affine_aamvp({model.mv_tl.hor - c.mvp0.hor,
                                     model.mv_tl.ver - c.mvp0.ver, MvPrec::QuarterPel},
                                    {model.mv_tr.hor - c.mvp1.hor,
                                     model.mv_tr.ver - c.mvp1.ver, MvPrec::QuarterPel});
    bits_aamvp = std::min(bits_aamvp, b);
  }
  const double cost_aamvp = rd_cost(sse_aamvp, bits_aamvp, lambda_);
  best.trials.push_back({PuMode::AffineAamvp, cost_aamvp});
  if (cost_aamvp < best.cost) {
    best.mode = PuMode::AffineAamvp;
    best.model = model;
    best.sse_luma = sse_aamvp;
    best.bits = bits_aamvp;
    best.cost = cost_aamvp;
    best.me_iterations = me.iterations;
    best.me_converged = me.converged;
  }

  if (cfg_.enable_amm) {
    if (const auto nb = amm_scan(grid_, x, y, size)) {
      AffineModel merged = amm_derive(x, y, size, *nb);
      const std::uint64_t sse_amm = block_sse_block_based(merged, x, y, size);
      const int bits_amm = bits_affine_amm();
      const double cost_amm = rd_cost(sse_amm, bits_amm, lambda_);
      // Without residual coding the two AMM flavors tie on cost; a PU with
      // nothing left to code is the skip case.
      const PuMode label = (sse_amm == 0) ? PuMode::AmmSkip : PuMode::AffineAmm;
      best.trials.push_back({label, cost_amm});
      if (cost_amm < best.cost) {
        best.mode = label;
        best.model = merged;
        best.sse_luma = sse_amm;
        best.bits = bits_amm;
        best.cost = cost_amm;
        best.me_iterations = 0;
        best.me_converged = false;
      }
    }
  }
  return best;
}

void FrameEncoder::commit_pu(const PredictionUnit& pu) {
  if (pu.mode == PuMode::Translational) {
    grid_.commit_translational(pu.x, pu.y, pu.size, pu.mv);
  } else {
    grid_.commit_affine(pu.x, pu.y, pu.size, pu.model);
  }
}

NodeResult FrameEncoder::encode_node(int x, int y, int size) {
  const bool fits = x + size <= cur_.width() && y + size <= cur_.height();
  if (!fits) {
    // Clipped root area: recurse into the largest fitting powers of two.
    NodeResult out;
    const int half = size / 2;
    for (const auto& [cx, cy] : {std::pair{x, y}, {x + half, y}, {x, y + half},
                                 {x + half, y + half}}) {
      if (cx >= cur_.width() || cy >= cur_.height()) {
        continue;
      }
      NodeResult child = encode_node(cx, cy, half);
      out.cost += child.cost;
      out.pus.insert(out.pus.end(), child.pus.begin(), child.pus.end());
    }
    return out;
  }

  PredictionUnit leaf = evaluate_leaf(x, y, size);
  if (size == 8) {
    decisions_.push_back({x, y, size, leaf.cost, -1.0, false});
    commit_pu(leaf);
    return {leaf.cost, {std::move(leaf)}};
  }

  // Children encode (and commit) in z-order so each sees its predecessors.
  NodeResult split;
  const int half = size / 2;
  for (const auto& [cx, cy] : {std::pair{x, y}, {x + half, y}, {x, y + half},
                               {x + half, y + half}}) {
    NodeResult child = encode_node(cx, cy, half);
    split.cost += child.cost;
    split.pus.insert(split.pus.end(), child.pus.begin(), child.pus.end());
  }
  decisions_.push_back({x, y, size, leaf.cost, split.cost, split.cost < leaf.cost});
  if (split.cost < leaf.cost) {
    return split;
  }
  grid_.clear_area(x, y, size);
  commit_pu(leaf);
  return {leaf.cost, {std::move(leaf)}};
}

EncodeResult FrameEncoder::run() {
  EncodeResult out;
  out.prediction = Frame(cur_.width(), cur_.height(), cur_.poc);

  for (int y = 0; y < cur_.height(); y += 64) {
    for (int x = 0; x < cur_.width(); x += 64) {
      NodeResult root = encode_node(x, y, 64);
      out.stats.total_cost += root.cost;
      out.pus.insert(out.pus.end(), root.pus.begin(), root.pus.end());
    }
  }
  out.decisions = std::move(decisions_);

  // Emission pass: re-render each chosen PU with the configured MC path and
  // collect telemetry. Mode decisions above are independent of these toggles.
  McOptions opts;
  opts.pixel_based = cfg_.pixel_based_mc;
  opts.two_step = cfg_.two_step_filter;
  FrameStats& st = out.stats;
  st.poc = cur_.poc;
  for (const PredictionUnit& pu : out.pus) {
    AffineModel model = pu.model;
    if (pu.mode == PuMode::Translational) {
      model.mv_tl = model.mv_tr = pu.mv;
      model.width = pu.size;
      model.org_x = pu.x;
      model.org_y = pu.y;
    }
    const PredBlock pred =
        motion_compensate_affine(ref_, pu.x, pu.y, pu.size, model, bank_, st.mc, opts);
    for (int j = 0; j < pu.size; ++j) {
      for (int i = 0; i < pu.size; ++i) {
        out.prediction.y.at(pu.x + i, pu.y + j) = pred.luma.at(i, j);
      }
    }
    for (int j = 0; j < pu.size / 2; ++j) {
      for (int i = 0; i < pu.size / 2; ++i) {
        out.prediction.cb.at(pu.x / 2 + i, pu.y / 2 + j) = pred.cb.at(i, j);
        out.prediction.cr.at(pu.x / 2 + i, pu.y / 2 + j) = pred.cr.at(i, j);
      }
    }

    const std::uint64_t area = static_cast<std::uint64_t>(pu.size) * pu.size;
    switch (pu.mode) {
      case PuMode::Translational: st.area_translational += area; break;
      case PuMode::AffineAamvp: st.area_aamvp += area; break;
      case PuMode::AffineAmm: st.area_amm += area; break;
      case PuMode::AmmSkip: st.area_amm_skip += area; break;
    }
    // Non-border accounting uses a fixed 16-pixel frame margin: the strip
    // where prediction references run off the frame and any mode struggles.
    constexpr int kBorderMargin = 16;
    const int ix0 = std::max(pu.x, kBorderMargin);
    const int iy0 = std::max(pu.y, kBorderMargin);
    const int ix1 = std::min(pu.x + pu.size, cur_.width() - kBorderMargin);
    const int iy1 = std::min(pu.y + pu.size, cur_.height() - kBorderMargin);
    if (ix1 > ix0 && iy1 > iy0) {
      const std::uint64_t interior = static_cast<std::uint64_t>(ix1 - ix0) * (iy1 - iy0);
      st.area_nonborder += interior;
      if (pu.is_affine()) {
        st.area_affine_nonborder += interior;
      }
    }
    st.total_bits += static_cast<std::uint64_t>(pu.bits);
    if (pu.mode == PuMode::AffineAamvp) {
      ++st.me_runs;
      st.me_iterations += static_cast<std::uint64_t>(pu.me_iterations);
      st.me_converged += pu.me_converged ? 1 : 0;
    }
  }
  out.prediction.pad();

  st.pu_count = static_cast<int>(out.pus.size());
  st.sse_y = sse(cur_.y, 0, 0, out.prediction.y, 0, 0, cur_.width(), cur_.height());
  st.sse_cb = sse(cur_.cb, 0, 0, out.prediction.cb, 0, 0, cur_.cb.width(), cur_.cb.height());
  st.sse_cr = sse(cur_.cr, 0, 0, out.prediction.cr, 0, 0, cur_.cr.width(), cur_.cr.height());
  st.psnr = psnr(cur_, out.prediction);
  return out;
}

}  // namespace

EncodeResult encode_frame(const Frame& cur, const Frame& ref, const EncodeConfig& cfg,
                          const FilterBank& bank) {
  if (cur.width() != ref.width() || cur.height() != ref.height()) {
    throw std::invalid_argument("encode_frame: frame dimensions differ");
  }
  if (cur.width() % 8 != 0 || cur.height() % 8 != 0) {
    throw std::invalid_argument("encode_frame: dimensions must be multiples of 8");
  }
  if (cfg.qp < 0 || cfg.qp > 51) {
    throw std::invalid_argument("encode_frame: qp must be in 0..51");
  }
  if (cfg.range < 1) {
    throw std::invalid_argument("encode_frame: range must be >= 1");
  }
  FrameEncoder enc(cur, ref, cfg, bank);
  return enc.run();
}

Plane render_mode_map(const EncodeResult& result, int width, int height) {
  Plane map(width, height, 8);
  for (const PredictionUnit& pu : result.pus) {
    std::uint8_t level = 64;
    switch (pu.mode) {
      case PuMode::Translational: level = 64; break;
      case PuMode::AffineAamvp: level = 128; break;
      case PuMode::AffineAmm: level = 192; break;
      case PuMode::AmmSkip: level = 255; break;
    }
    for (int j = 0; j < pu.size; ++j) {
      for (int i = 0; i < pu.size; ++i) {
        map.at(pu.x + i, pu.y + j) = level;
      }
    }
  }
  return map;
}

Plane render_partition_map(const EncodeResult& result) {
  Plane map(result.prediction.width(), result.prediction.height(), 8);
  for (int y = 0; y < map.height(); ++y) {
    for (int x = 0; x < map.width(); ++x) {
      map.at(x, y) = result.prediction.y.at(x, y);
    }
  }
  for (const PredictionUnit& pu : result.pus) {
    for (int i = 0; i < pu.size; ++i) {
      map.at(pu.x + i, pu.y) = 255;
      map.at(pu.x, pu.y + i) = 255;
    }
  }
  return map;
}

std::string stats_csv_header() {
  return "poc,pu_count,area_translational,area_aamvp,area_amm,area_amm_skip,"
         "affine_area_pct,nonborder_affine_pct,total_bits,total_cost,"
         "sse_y,sse_cb,sse_cr,psnr_y,psnr_cb,psnr_cr,"
         "me_runs,me_mean_iters,me_converged_pct,mc_units,interp_luma,interp_chroma";
}

namespace {

double pct(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? 0.0 : 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::string stats_csv_row(const FrameStats& s) {
  std::ostringstream os;
  os.precision(4);
  os << std::fixed;
  os << s.poc << ',' << s.pu_count << ',' << s.area_translational << ',' << s.area_aamvp
     << ',' << s.area_amm << ',' << s.area_amm_skip << ','
     << pct(s.area_affine(), s.area_total()) << ','
     << pct(s.area_affine_nonborder, s.area_nonborder) << ',' << s.total_bits << ','
     << s.total_cost << ',' << s.sse_y << ',' << s.sse_cb << ',' << s.sse_cr << ','
     << s.psnr.y << ',' << s.psnr.cb << ',' << s.psnr.cr << ',' << s.me_runs << ','
     << (s.me_runs ? static_cast<double>(s.me_iterations) / s.me_runs : 0.0) << ','
     << pct(static_cast<std::uint64_t>(s.me_converged),
            static_cast<std::uint64_t>(s.me_runs))
     << ',' << s.mc.units << ',' << s.mc.interp.luma << ',' << s.mc.interp.chroma;
  return os.str();
}

}  // namespace affinemc
