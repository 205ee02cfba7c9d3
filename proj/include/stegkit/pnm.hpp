#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "stegkit/image.hpp"

namespace stegkit {

struct PnmError : std::runtime_error {
  explicit PnmError(const std::string& what) : std::runtime_error("pnm: " + what) {}
};

namespace detail {

// Skips whitespace runs and '#' comment lines between header tokens.
inline void pnm_skip_space(std::span<const std::uint8_t> data, std::size_t& pos) {
  while (pos < data.size()) {
    const std::uint8_t c = data[pos];
    if (c == '#') {
      while (pos < data.size() && data[pos] != '\n') ++pos;
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      ++pos;
    } else {
      break;
    }
  }
}

inline long pnm_read_int(std::span<const std::uint8_t> data, std::size_t& pos,
                         const char* field) {
  pnm_skip_space(data, pos);
  if (pos >= data.size() || data[pos] < '0' || data[pos] > '9')
    throw PnmError(std::string("malformed header: expected ") + field);
  long value = 0;
  while (pos < data.size() && data[pos] >= '0' && data[pos] <= '9') {
    value = value * 10 + (data[pos] - '0');
    if (value > 1000000000L) throw PnmError(std::string("malformed header: ") + field + " too large");
    ++pos;
  }
  return value;
}

}  // namespace detail

/// Decodes binary P5 (grayscale) or P6 (RGB), maxval 255. Header tolerates any
/// whitespace runs and '#' comments; exactly one whitespace byte separates the
/// maxval from the raw pixel data. Trailing bytes after the pixel data are ignored.
inline Image read_pnm(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P')
    throw PnmError("malformed header: missing magic");
  const char digit = static_cast<char>(data[1]);
  if (digit != '5' && digit != '6') {
    if (digit >= '1' && digit <= '7')
      throw PnmError(std::string("unsupported magic P") + digit);
    throw PnmError("malformed header: missing magic");
  }
  const bool rgb = digit == '6';

  std::size_t pos = 2;
  const long width = detail::pnm_read_int(data, pos, "width");
  const long height = detail::pnm_read_int(data, pos, "height");
  const long maxval = detail::pnm_read_int(data, pos, "maxval");
  if (width <= 0 || height <= 0) throw PnmError("malformed header: non-positive dimensions");
  if (maxval != 255) throw PnmError("unsupported maxval " + std::to_string(maxval));
  if (pos >= data.size()) throw PnmError("truncated pixel data");
  ++pos;  // single whitespace byte after maxval

  const std::size_t npix = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  const std::size_t need = npix * (rgb ? 3 : 1);
  if (data.size() - pos < need) throw PnmError("truncated pixel data");

  if (!rgb) {
    ImagePlane plane(static_cast<int>(width), static_cast<int>(height));
    std::copy(data.begin() + pos, data.begin() + pos + need, plane.pixels.begin());
    return plane;
  }
  ImagePlane r(static_cast<int>(width), static_cast<int>(height));
  ImagePlane g = r, b = r;
  for (std::size_t i = 0; i < npix; ++i) {
    r.pixels[i] = data[pos + 3 * i];
    g.pixels[i] = data[pos + 3 * i + 1];
    b.pixels[i] = data[pos + 3 * i + 2];
  }
  return RgbImage(std::move(r), std::move(g), std::move(b));
}

inline Image read_pnm(const std::vector<std::uint8_t>& data) {
  return read_pnm(std::span<const std::uint8_t>(data));
}

/// Canonical encoder: "P5\n<w> <h>\n255\n" (or P6) followed by raw samples.
/// read_pnm(write_pnm(x)) == x bit-exactly.
inline std::vector<std::uint8_t> write_pnm(const Image& img) {
  const bool rgb = std::holds_alternative<RgbImage>(img);
  const int w = image_width(img);
  const int h = image_height(img);
  std::string header = std::string(rgb ? "P6" : "P5") + "\n" + std::to_string(w) + " " +
                       std::to_string(h) + "\n255\n";
  const std::size_t npix = static_cast<std::size_t>(w) * h;
  std::vector<std::uint8_t> out;
  out.reserve(header.size() + npix * (rgb ? 3 : 1));
  out.insert(out.end(), header.begin(), header.end());
  if (!rgb) {
    const auto& plane = std::get<ImagePlane>(img);
    out.insert(out.end(), plane.pixels.begin(), plane.pixels.end());
  } else {
    const auto& rgbimg = std::get<RgbImage>(img);
    for (std::size_t i = 0; i < npix; ++i) {
      out.push_back(rgbimg.r.pixels[i]);
      out.push_back(rgbimg.g.pixels[i]);
      out.push_back(rgbimg.b.pixels[i]);
    }
  }
  return out;
}

}  // namespace stegkit
