#pragma once

#include <string>
#include <vector>

#include "affinemc/plane.hpp"

namespace affinemc {

/// One 4:2:0 picture: luma plus two half-resolution chroma planes
/// (dimensions rounded up) and a display-order index (POC).
struct Frame {
  Plane y;
  Plane cb;
  Plane cr;
  int poc = 0;

  Frame() = default;
  Frame(int width, int height, int poc = 0);

  int width() const { return y.width(); }
  int height() const { return y.height(); }

  void pad();
};

std::size_t yuv420_frame_bytes(int width, int height);

/// Reads frame `frame_index` of a raw planar I420 file (Y, Cb, Cr order).
/// Margins are padded on return. Throws std::runtime_error with byte counts
/// if the file is too short, std::invalid_argument on non-positive dims.
Frame read_yuv420(const std::string& path, int width, int height, int frame_index);

/// Appends all frames to `path` in I420 order (interior samples only).
void write_yuv420(const std::vector<Frame>& frames, const std::string& path);

/// Writes one plane's interior as a binary PGM (P5, maxval 255).
void write_pgm(const Plane& plane, const std::string& path);

}  // namespace affinemc
