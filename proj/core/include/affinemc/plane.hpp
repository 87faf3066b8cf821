#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace affinemc {

/// 8-bit sample raster with an edge-replicated padding margin on all four
/// sides. The margin (default 80) covers the +/-64-pel search range plus the
/// 8-tap filter and Sobel reach, so inner loops never bound-check.
class Plane {
 public:
  static constexpr int kDefaultMargin = 80;

  Plane() = default;
  Plane(int width, int height, int margin = kDefaultMargin)
      : width_(width), height_(height), margin_(margin),
        stride_(width + 2 * margin),
        data_(static_cast<std::size_t>(stride_) * (height + 2 * margin), 0) {
    if (width <= 0 || height <= 0 || margin < 8) {
      throw std::invalid_argument("Plane: width/height must be positive, margin >= 8");
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  int margin() const { return margin_; }
  int stride() const { return stride_; }

  /// Sample access; (x,y) may range over [-margin, dim+margin).
  std::uint8_t at(int x, int y) const { return data_[index(x, y)]; }
  std::uint8_t& at(int x, int y) { return data_[index(x, y)]; }

  bool in_padded(int x, int y) const {
    return x >= -margin_ && x < width_ + margin_ && y >= -margin_ && y < height_ + margin_;
  }

  /// Replicates the interior edge samples into the margins. Idempotent.
  void pad();

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y + margin_) * stride_ + (x + margin_);
  }

  int width_ = 0;
  int height_ = 0;
  int margin_ = 0;
  int stride_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Plain sample block, used for prediction outputs and block views.
struct PelBlock {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pel;

  PelBlock() = default;
  PelBlock(int w, int h) : width(w), height(h), pel(static_cast<std::size_t>(w) * h, 0) {}

  std::uint8_t at(int x, int y) const { return pel[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return pel[static_cast<std::size_t>(y) * width + x]; }
};

}  // namespace affinemc
