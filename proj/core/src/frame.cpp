#include "affinemc/frame.hpp"

#include <fstream>

namespace affinemc {

Frame::Frame(int width, int height, int poc_)
    : y(width, height),
      cb((width + 1) / 2, (height + 1) / 2),
      cr((width + 1) / 2, (height + 1) / 2),
      poc(poc_) {}

void Frame::pad() {
  y.pad();
  cb.pad();
  cr.pad();
}

std::size_t yuv420_frame_bytes(int width, int height) {
  const std::size_t luma = static_cast<std::size_t>(width) * height;
  const std::size_t chroma = static_cast<std::size_t>((width + 1) / 2) * ((height + 1) / 2);
  return luma + 2 * chroma;
}

namespace {

void read_plane(std::ifstream& in, Plane& plane) {
  std::vector<char> row(plane.width());
  for (int y = 0; y < plane.height(); ++y) {
    in.read(row.data(), row.size());
    for (int x = 0; x < plane.width(); ++x) {
      plane.at(x, y) = static_cast<std::uint8_t>(row[x]);
    }
  }
}

void write_plane(std::ofstream& out, const Plane& plane) {
  std::vector<char> row(plane.width());
  for (int y = 0; y < plane.height(); ++y) {
    for (int x = 0; x < plane.width(); ++x) {
      row[x] = static_cast<char>(plane.at(x, y));
    }
    out.write(row.data(), row.size());
  }
}

}  // namespace

Frame read_yuv420(const std::string& path, int width, int height, int frame_index) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("read_yuv420: dimensions must be positive");
  }
  if (frame_index < 0) {
    throw std::invalid_argument("read_yuv420: negative frame index");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("read_yuv420: cannot open " + path);
  }
  in.seekg(0, std::ios::end);
  const std::uint64_t file_size = static_cast<std::uint64_t>(in.tellg());
  const std::uint64_t frame_bytes = yuv420_frame_bytes(width, height);
  const std::uint64_t needed = frame_bytes * (static_cast<std::uint64_t>(frame_index) + 1);
  if (file_size < needed) {
    throw std::runtime_error("read_yuv420: " + path + " holds " + std::to_string(file_size) +
                             " bytes, frame " + std::to_string(frame_index) + " needs " +
                             std::to_string(needed));
  }
  in.seekg(static_cast<std::streamoff>(frame_bytes) * frame_index, std::ios::beg);

  Frame frame(width, height, frame_index);
  read_plane(in, frame.y);
  read_plane(in, frame.cb);
  read_plane(in, frame.cr);
  if (!in) {
    throw std::runtime_error("read_yuv420: short read from " + path);
  }
  frame.pad();
  return frame;
}

void write_yuv420(const std::vector<Frame>& frames, const std::string& path) {
  for (std::size_t i = 1; i < frames.size(); ++i) {
    if (frames[i].width() != frames[0].width() || frames[i].height() != frames[0].height()) {
      throw std::invalid_argument("write_yuv420: frames must share dimensions");
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("write_yuv420: cannot open " + path);
  }
  for (const Frame& f : frames) {
    write_plane(out, f.y);
    write_plane(out, f.cb);
    write_plane(out, f.cr);
  }
  if (!out) {
    throw std::runtime_error("write_yuv420: write failed for " + path);
  }
}

void write_pgm(const Plane& plane, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("write_pgm: cannot open " + path);
  }
  out << "P5\n" << plane.width() << " " << plane.height() << "\n255\n";
  std::vector<char> row(plane.width());
  for (int y = 0; y < plane.height(); ++y) {
    for (int x = 0; x < plane.width(); ++x) {
      row[x] = static_cast<char>(plane.at(x, y));
    }
    out.write(row.data(), row.size());
  }
  if (!out) {
    throw std::runtime_error("write_pgm: write failed for " + path);
  }
}

}  // namespace affinemc
