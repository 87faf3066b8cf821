#include "affinemc/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "affinemc/filter_bank.hpp"
#include "affinemc/synth.hpp"

namespace affinemc {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw std::invalid_argument(what);
  }
}

std::string zero_padded(int v, int width) {
  std::string s = std::to_string(v);
  while (static_cast<int>(s.size()) < width) {
    s.insert(s.begin(), '0');
  }
  return s;
}

}  // namespace

std::string cmd_synth(const SynthConfig& cfg) {
  require(!cfg.base.empty(), "synth: --base is required");
  require(!cfg.out.empty(), "synth: --out is required");
  require(cfg.width > 0 && cfg.height > 0, "synth: width/height must be positive");
  require(cfg.count >= 1, "synth: count must be >= 1");
  require(cfg.rho > 0.0, "synth: rho must be positive");

  const Frame base = read_yuv420(cfg.base, cfg.width, cfg.height, 0);

  std::vector<Frame> frames;
  std::vector<TruthRecord> truth;
  frames.reserve(cfg.count);
  for (int k = 0; k < cfg.count; ++k) {
    WarpParams w;
    w.theta = cfg.theta * k;
    w.rho = std::pow(cfg.rho, k);
    w.tx = cfg.tx * k;
    w.ty = cfg.ty * k;
    if (k == 0) {
      Frame f = base;
      f.poc = 0;
      frames.push_back(std::move(f));
    } else {
      Frame f = synth_affine_pair(base, w);
      f.poc = k;
      frames.push_back(std::move(f));
    }
    truth.push_back({k, w});
  }
  write_yuv420(frames, cfg.out);
  const std::string sidecar = cfg.out + ".truth";
  write_truth_sidecar(truth, sidecar);
  return sidecar;
}

void cmd_predict(const RunConfig& cfg) {
  require(!cfg.input.empty(), "predict: --input is required");
  require(cfg.width > 0 && cfg.height > 0, "predict: width/height must be positive");
  require(cfg.width % 8 == 0 && cfg.height % 8 == 0,
          "predict: dimensions must be multiples of 8");
  require(cfg.frames >= 2, "predict: need at least 2 frames");
  require(cfg.qp >= 0 && cfg.qp <= 51, "predict: qp must be in 0..51");
  require(cfg.range >= 1, "predict: range must be >= 1");

  std::filesystem::create_directories(cfg.out_dir);

  EncodeConfig ec;
  ec.qp = cfg.qp;
  ec.range = cfg.range;
  ec.enable_affine = !cfg.no_affine;
  ec.enable_amm = !cfg.no_amm;
  ec.pixel_based_mc = cfg.pixel_mc;
  ec.two_step_filter = cfg.two_step_filter;

  const FilterBank bank = make_filter_bank();

  std::ofstream csv(cfg.out_dir + "/stats.csv", std::ios::trunc);
  if (!csv) {
    throw std::runtime_error("predict: cannot open " + cfg.out_dir + "/stats.csv");
  }
  csv << stats_csv_header() << "\n";

  std::vector<Frame> out_frames;
  Frame ref = read_yuv420(cfg.input, cfg.width, cfg.height, 0);
  out_frames.push_back(ref);  // POC 0 passes through untouched
  for (int k = 1; k < cfg.frames; ++k) {
    Frame cur = read_yuv420(cfg.input, cfg.width, cfg.height, k);
    EncodeResult result = encode_frame(cur, ref, ec, bank);
    csv << stats_csv_row(result.stats) << "\n";

    write_pgm(render_mode_map(result, cfg.width, cfg.height),
              cfg.out_dir + "/modemap_poc" + zero_padded(k, 3) + ".pgm");
    write_pgm(render_partition_map(result),
              cfg.out_dir + "/partition_poc" + zero_padded(k, 3) + ".pgm");

    out_frames.push_back(result.prediction);
    ref = std::move(cur);
  }
  write_yuv420(out_frames, cfg.out_dir + "/pred.yuv");
  if (!csv) {
    throw std::runtime_error("predict: write failed for stats.csv");
  }
}

void cmd_filters(int taps, const std::string& out_path) {
  require(taps == 4 || taps == 8, "filters: taps must be 4 or 8");
  write_filter_csv(make_filter_bank(), taps, out_path);
}

namespace {

int to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    require(used == value.size(), "config: bad integer for " + key);
    return v;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("config: bad integer for " + key);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("config: integer out of range for " + key);
  }
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    require(used == value.size(), "config: bad number for " + key);
    return v;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("config: bad number for " + key);
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("config: number out of range for " + key);
  }
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true") {
    return true;
  }
  if (value == "0" || value == "false") {
    return false;
  }
  throw std::invalid_argument("config: bad boolean for " + key);
}

template <typename Apply>
void parse_flat_config(const std::string& path, Apply apply) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open " + path);
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const std::size_t eq = line.find('=');
    require(eq != std::string::npos,
            "config: missing '=' at " + path + ":" + std::to_string(lineno));
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    const auto trim = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      s = (b == std::string::npos) ? std::string{} : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    apply(key, value);
  }
}

}  // namespace

void apply_config_file(RunConfig& cfg, const std::string& path) {
  parse_flat_config(path, [&](const std::string& key, const std::string& value) {
    if (key == "input") cfg.input = value;
    else if (key == "width") cfg.width = to_int(key, value);
    else if (key == "height") cfg.height = to_int(key, value);
    else if (key == "frames") cfg.frames = to_int(key, value);
    else if (key == "qp") cfg.qp = to_int(key, value);
    else if (key == "range") cfg.range = to_int(key, value);
    else if (key == "no-affine") cfg.no_affine = to_bool(key, value);
    else if (key == "no-amm") cfg.no_amm = to_bool(key, value);
    else if (key == "pixel-mc") cfg.pixel_mc = to_bool(key, value);
    else if (key == "two-step-filter") cfg.two_step_filter = to_bool(key, value);
    else if (key == "out") cfg.out_dir = value;
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  });
}

void apply_config_file(SynthConfig& cfg, const std::string& path) {
  parse_flat_config(path, [&](const std::string& key, const std::string& value) {
    if (key == "base") cfg.base = value;
    else if (key == "width") cfg.width = to_int(key, value);
    else if (key == "height") cfg.height = to_int(key, value);
    else if (key == "theta") cfg.theta = to_double(key, value);
    else if (key == "rho") cfg.rho = to_double(key, value);
    else if (key == "tx") cfg.tx = to_double(key, value);
    else if (key == "ty") cfg.ty = to_double(key, value);
    else if (key == "count") cfg.count = to_int(key, value);
    else if (key == "out") cfg.out = value;
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  });
}

}  // namespace affinemc
