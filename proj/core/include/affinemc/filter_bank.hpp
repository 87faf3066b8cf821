#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace affinemc {

/// Integer interpolation filters for all 64 fractional phases of a 1/64-pel
/// grid, 8 taps for luma and 4 for chroma. Every row sums to 64 (norm shift
/// 6), row 0 is the identity filter, and row 64-k is the mirror of row k.
struct FilterBank {
  static constexpr int kNormShift = 6;
  static constexpr int kLumaTaps = 8;
  static constexpr int kChromaTaps = 4;

  std::array<std::array<std::int16_t, kLumaTaps>, 64> luma{};
  std::array<std::array<std::int16_t, kChromaTaps>, 64> chroma{};
};

/// Generates one integer filter row for fractional offset phase/64.
///
/// Real-valued coefficients come from the DCT-II interpolation basis for
/// num_taps samples, evaluated at the fractional position and shaped by a
/// cos(pi*t/(num_taps+4)) smoothing window (the same construction behind the
/// standardized 8-tap half-pel filter). They are scaled by 64, rounded
/// half-away-from-zero, and the center tap absorbs any residual so the row
/// sums to exactly 64.
std::vector<int> generate_dctif_taps(int num_taps, int phase);

/// Builds the full 64-phase luma + chroma bank.
FilterBank make_filter_bank();

/// Writes one tap table as CSV: "phase,c0,...,c{n-1}", 64 rows.
void write_filter_csv(const FilterBank& bank, int num_taps, const std::string& path);

}  // namespace affinemc
