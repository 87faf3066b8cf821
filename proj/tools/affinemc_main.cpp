#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "affinemc/cli.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-parameter affine motion-compensation toolbox"};
  app.require_subcommand(1);

  affinemc::SynthConfig synth;
  CLI::App* s = app.add_subcommand("synth", "Generate a warped sequence with ground truth");
  s->add_option("--base", synth.base, "Seed YUV file (frame 0 is used)");
  s->add_option("--width", synth.width);
  s->add_option("--height", synth.height);
  s->add_option("--theta", synth.theta, "Per-frame rotation step, radians");
  s->add_option("--rho", synth.rho, "Per-frame zoom step");
  s->add_option("--tx", synth.tx, "Per-frame horizontal shift, pixels");
  s->add_option("--ty", synth.ty, "Per-frame vertical shift, pixels");
  s->add_option("--count", synth.count, "Number of frames including the base");
  s->add_option("--out", synth.out, "Output YUV path");
  std::string synth_config;
  s->add_option("--config", synth_config, "Flat key=value config file");

  affinemc::RunConfig run;
  CLI::App* p = app.add_subcommand("predict", "Run the inter-prediction harness");
  p->add_option("--input", run.input, "Input YUV 4:2:0 file");
  p->add_option("--width", run.width);
  p->add_option("--height", run.height);
  p->add_option("--frames", run.frames, "Frames to read (>= 2)");
  p->add_option("--qp", run.qp, "Quantization parameter, 0..51");
  p->add_option("--range", run.range, "Search range in pixels");
  p->add_flag("--no-affine", run.no_affine, "Translational-only baseline");
  p->add_flag("--no-amm", run.no_amm, "Disable the model-merge mode");
  p->add_flag("--pixel-mc", run.pixel_mc, "Emit with pixel-based MC (oracle path)");
  p->add_flag("--two-step-filter", run.two_step_filter,
              "Emit with the legacy two-step interpolation");
  p->add_option("--out", run.out_dir, "Output directory");
  std::string predict_config;
  p->add_option("--config", predict_config, "Flat key=value config file");

  int filter_taps = 8;
  std::string filter_out = "filters.csv";
  CLI::App* f = app.add_subcommand("filters", "Dump the interpolation tap table as CSV");
  f->add_option("--taps", filter_taps, "4 or 8");
  f->add_option("--out", filter_out, "Output CSV path");

  // Two-pass parse: the first pass only locates --config; the file seeds the
  // option values and the second pass lets command-line flags win.
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (s->parsed() && !synth_config.empty()) {
      affinemc::apply_config_file(synth, synth_config);
      s->clear();
      app.clear();
      app.parse(argc, argv);
    } else if (p->parsed() && !predict_config.empty()) {
      affinemc::apply_config_file(run, predict_config);
      p->clear();
      app.clear();
      app.parse(argc, argv);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (s->parsed()) {
      affinemc::cmd_synth(synth);
    } else if (p->parsed()) {
      affinemc::cmd_predict(run);
    } else if (f->parsed()) {
      affinemc::cmd_filters(filter_taps, filter_out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::runtime_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
