#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "affinemc/cli.hpp"
#include "affinemc/synth.hpp"
#include "../support/textures.hpp"

using namespace affinemc;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("affinemc_cli_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::vector<char> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string write_base(const TempDir& dir, int w, int h, std::uint32_t seed) {
  const std::string path = dir.file("base.yuv");
  write_yuv420({testsupport::textured_frame(w, h, seed)}, path);
  return path;
}

// affine_area_pct is column 6 (0-based) of stats.csv rows.
std::vector<double> csv_column(const std::string& path, int col) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> out;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    for (int i = 0; i <= col; ++i) {
      std::getline(ss, cell, ',');
    }
    out.push_back(std::stod(cell));
  }
  return out;
}

}  // namespace

TEST_CASE("flat config files") {
  TempDir dir;
  std::ofstream out(dir.file("run.cfg"));
  out << "# comment line\n"
      << "input=seq.yuv\n"
      << "width = 64\n"
      << "qp=30\n"
      << "pixel-mc=true\n";
  out.close();

  RunConfig cfg;
  apply_config_file(cfg, dir.file("run.cfg"));
  CHECK(cfg.input == "seq.yuv");
  CHECK(cfg.width == 64);
  CHECK(cfg.qp == 30);
  CHECK(cfg.pixel_mc);
  CHECK(cfg.height == 0);  // untouched

  std::ofstream bad(dir.file("bad.cfg"));
  bad << "nonsense=1\n";
  bad.close();
  RunConfig cfg2;
  CHECK_THROWS_AS(apply_config_file(cfg2, dir.file("bad.cfg")), std::invalid_argument);
  CHECK_THROWS_AS(apply_config_file(cfg2, dir.file("missing.cfg")), std::invalid_argument);

  std::ofstream sc(dir.file("synth.cfg"));
  sc << "rho=1.05\ncount=4\n";
  sc.close();
  SynthConfig syn;
  apply_config_file(syn, dir.file("synth.cfg"));
  CHECK(syn.rho == doctest::Approx(1.05));
  CHECK(syn.count == 4);
}

TEST_CASE("cmd_filters") {
  TempDir dir;
  cmd_filters(8, dir.file("luma.csv"));

  std::ifstream in(dir.file("luma.csv"));
  std::string line;
  std::getline(in, line);
  CHECK(line == "phase,c0,c1,c2,c3,c4,c5,c6,c7");
  int rows = 0;
  std::string phase0;
  std::string phase32;
  while (std::getline(in, line)) {
    if (rows == 0) {
      phase0 = line;
    }
    if (rows == 32) {
      phase32 = line;
    }
    ++rows;
  }
  CHECK(rows == 64);
  CHECK(phase0 == "0,0,0,0,64,0,0,0,0");
  CHECK(phase32 == "32,-1,4,-11,40,40,-11,4,-1");

  CHECK_THROWS_AS(cmd_filters(6, dir.file("bad.csv")), std::invalid_argument);
}

TEST_CASE("cmd_synth") {
  TempDir dir;
  const std::string base = write_base(dir, 32, 32, 71);

  SUBCASE("identity parameters copy the base") {
    SynthConfig cfg;
    cfg.base = base;
    cfg.width = 32;
    cfg.height = 32;
    cfg.count = 3;
    cfg.out = dir.file("ident.yuv");
    cmd_synth(cfg);
    const Frame f0 = read_yuv420(cfg.out, 32, 32, 0);
    const Frame f2 = read_yuv420(cfg.out, 32, 32, 2);
    for (int y = 0; y < 32; ++y) {
      for (int x = 0; x < 32; ++x) {
        CHECK(f0.y.at(x, y) == f2.y.at(x, y));
      }
    }
  }
  SUBCASE("zoom steps compound in the sidecar") {
    SynthConfig cfg;
    cfg.base = base;
    cfg.width = 32;
    cfg.height = 32;
    cfg.rho = 1.02;
    cfg.count = 10;
    cfg.out = dir.file("zoom.yuv");
    const std::string sidecar = cmd_synth(cfg);
    const auto truth = read_truth_sidecar(sidecar);
    REQUIRE(truth.size() == 10);
    for (int k = 0; k < 10; ++k) {
      CHECK(truth[k].poc == k);
      CHECK(truth[k].warp.rho == doctest::Approx(std::pow(1.02, k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("cmd_predict") {
  TempDir dir;
  const std::string base = write_base(dir, 64, 64, 73);
  SynthConfig synth;
  synth.base = base;
  synth.width = 64;
  synth.height = 64;
  synth.rho = 1.02;
  synth.count = 2;
  synth.out = dir.file("seq.yuv");
  cmd_synth(synth);

  RunConfig run;
  run.input = synth.out;
  run.width = 64;
  run.height = 64;
  run.frames = 2;
  run.qp = 32;

  SUBCASE("two invocations are byte-identical") {
    run.out_dir = dir.file("a");
    cmd_predict(run);
    run.out_dir = dir.file("b");
    cmd_predict(run);
    CHECK(slurp(dir.file("a") + "/stats.csv") == slurp(dir.file("b") + "/stats.csv"));
    CHECK(slurp(dir.file("a") + "/pred.yuv") == slurp(dir.file("b") + "/pred.yuv"));
    CHECK(slurp(dir.file("a") + "/modemap_poc001.pgm") ==
          slurp(dir.file("b") + "/modemap_poc001.pgm"));
  }
  SUBCASE("--no-affine produces a translational-only run") {
    run.out_dir = dir.file("trans");
    run.no_affine = true;
    cmd_predict(run);
    const auto pct = csv_column(run.out_dir + "/stats.csv", 6);
    REQUIRE(pct.size() == 1);
    CHECK(pct[0] == 0.0);
  }
  SUBCASE("--pixel-mc keeps decisions and changes only the rendering") {
    run.out_dir = dir.file("block");
    cmd_predict(run);
    run.out_dir = dir.file("pixel");
    run.pixel_mc = true;
    cmd_predict(run);
    // Same tree and modes...
    CHECK(slurp(dir.file("block") + "/modemap_poc001.pgm") ==
          slurp(dir.file("pixel") + "/modemap_poc001.pgm"));
    // ...same bit budget (column 8)...
    CHECK(csv_column(dir.file("block") + "/stats.csv", 8) ==
          csv_column(dir.file("pixel") + "/stats.csv", 8));
    // ...but the pixel path does more interpolation work (column 20).
    CHECK(csv_column(dir.file("pixel") + "/stats.csv", 20)[0] >=
          csv_column(dir.file("block") + "/stats.csv", 20)[0]);
  }
  SUBCASE("config validation") {
    RunConfig bad = run;
    bad.width = 60;  // not a multiple of 8
    CHECK_THROWS_AS(cmd_predict(bad), std::invalid_argument);
    bad = run;
    bad.frames = 1;
    CHECK_THROWS_AS(cmd_predict(bad), std::invalid_argument);
    bad = run;
    bad.input = dir.file("missing.yuv");
    CHECK_THROWS_AS(cmd_predict(bad), std::runtime_error);
  }
}
