#include "affinemc/filter_bank.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace affinemc {

namespace {

// DCT-II interpolation weight of sample j (j = 0..n-1) for evaluation
// position x on the same scale.
double dct_basis_weight(int n, int j, double x) {
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double beta = (k == 0) ? 0.5 : 1.0;
    acc += beta * std::cos(std::numbers::pi * k * (2 * j + 1) / (2.0 * n)) *
           std::cos(std::numbers::pi * k * (2.0 * x + 1.0) / (2.0 * n));
  }
  return 2.0 / n * acc;
}

int round_away(double v) {
  return static_cast<int>(v >= 0 ? std::floor(v + 0.5) : std::ceil(v - 0.5));
}

}  // namespace

std::vector<int> generate_dctif_taps(int num_taps, int phase) {
  if (num_taps != 4 && num_taps != 8) {
    throw std::invalid_argument("generate_dctif_taps: tap count must be 4 or 8");
  }
  if (phase < 0 || phase > 63) {
    throw std::invalid_argument("generate_dctif_taps: phase must be 0..63");
  }
  const double alpha = phase / 64.0;
  // The interpolated position sits between taps n/2-1 and n/2.
  const double x = num_taps / 2 - 1 + alpha;
  const double window_len = num_taps + 4;

  std::vector<int> row(num_taps);
  for (int j = 0; j < num_taps; ++j) {
    const double w = std::cos(std::numbers::pi * (j - x) / window_len);
    row[j] = round_away(64.0 * dct_basis_weight(num_taps, j, x) * w);
  }

  // Absorb the rounding residual into the center tap nearest the phase; at
  // the self-mirrored half phase the residual is even and split across both
  // centers, which keeps row(64-k) == reverse(row(k)) for every phase.
  const int residual = 64 - std::accumulate(row.begin(), row.end(), 0);
  if (residual != 0) {
    if (phase < 32) {
      row[num_taps / 2 - 1] += residual;
    } else if (phase > 32) {
      row[num_taps / 2] += residual;
    } else {
      row[num_taps / 2 - 1] += residual / 2;
      row[num_taps / 2] += residual - residual / 2;
    }
  }
  return row;
}

FilterBank make_filter_bank() {
  FilterBank bank;
  for (int phase = 0; phase < 64; ++phase) {
    const std::vector<int> l = generate_dctif_taps(FilterBank::kLumaTaps, phase);
    const std::vector<int> c = generate_dctif_taps(FilterBank::kChromaTaps, phase);
    for (int j = 0; j < FilterBank::kLumaTaps; ++j) {
      bank.luma[phase][j] = static_cast<std::int16_t>(l[j]);
    }
    for (int j = 0; j < FilterBank::kChromaTaps; ++j) {
      bank.chroma[phase][j] = static_cast<std::int16_t>(c[j]);
    }
  }
  return bank;
}

void write_filter_csv(const FilterBank& bank, int num_taps, const std::string& path) {
  if (num_taps != 4 && num_taps != 8) {
    throw std::invalid_argument("write_filter_csv: tap count must be 4 or 8");
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw std::runtime_error("write_filter_csv: cannot open " + path);
  }
  out << "phase";
  for (int j = 0; j < num_taps; ++j) {
    out << ",c" << j;
  }
  out << "\n";
  for (int phase = 0; phase < 64; ++phase) {
    out << phase;
    for (int j = 0; j < num_taps; ++j) {
      out << "," << (num_taps == 8 ? bank.luma[phase][j] : bank.chroma[phase][j]);
    }
    out << "\n";
  }
  if (!out) {
    throw std::runtime_error("write_filter_csv: write failed for " + path);
  }
}

}  // namespace affinemc
