#include "affinemc/plane.hpp"

namespace affinemc {

void Plane::pad() {
  // Left/right margins from the interior rows, then whole top/bottom rows.
  for (int y = 0; y < height_; ++y) {
    const std::uint8_t left = at(0, y);
    const std::uint8_t right = at(width_ - 1, y);
    for (int x = -margin_; x < 0; ++x) {
      at(x, y) = left;
    }
    for (int x = width_; x < width_ + margin_; ++x) {
      at(x, y) = right;
    }
  }
  for (int y = -margin_; y < 0; ++y) {
    for (int x = -margin_; x < width_ + margin_; ++x) {
      at(x, y) = at(x, 0);
    }
  }
  for (int y = height_; y < height_ + margin_; ++y) {
    for (int x = -margin_; x < width_ + margin_; ++x) {
      at(x, y) = at(x, height_ - 1);
    }
  }
}

}  // namespace affinemc
