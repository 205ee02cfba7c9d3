#pragma once

#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

namespace stegkit {

/// Single 8-bit channel, row-major, top-left origin.
struct ImagePlane {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  ImagePlane() = default;
  ImagePlane(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("ImagePlane: dimensions must be positive");
  }
  ImagePlane(int w, int h, std::vector<std::uint8_t> px)
      : width(w), height(h), pixels(std::move(px)) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("ImagePlane: dimensions must be positive");
    if (pixels.size() != static_cast<std::size_t>(w) * h)
      throw std::invalid_argument("ImagePlane: pixel count does not match dimensions");
  }

  std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return pixels.size(); }

  bool operator==(const ImagePlane&) const = default;
};

/// Planar RGB; all three channels share dimensions.
struct RgbImage {
  ImagePlane r, g, b;

  RgbImage() = default;
  RgbImage(ImagePlane r_, ImagePlane g_, ImagePlane b_)
      : r(std::move(r_)), g(std::move(g_)), b(std::move(b_)) {
    if (r.width != g.width || r.width != b.width || r.height != g.height || r.height != b.height)
      throw std::invalid_argument("RgbImage: channel dimensions differ");
  }

  int width() const { return r.width; }
  int height() const { return r.height; }

  bool operator==(const RgbImage&) const = default;
};

using Image = std::variant<ImagePlane, RgbImage>;

inline int image_width(const Image& img) {
  return std::holds_alternative<ImagePlane>(img) ? std::get<ImagePlane>(img).width
                                                 : std::get<RgbImage>(img).width();
}

inline int image_height(const Image& img) {
  return std::holds_alternative<ImagePlane>(img) ? std::get<ImagePlane>(img).height
                                                 : std::get<RgbImage>(img).height();
}

inline int image_channels(const Image& img) {
  return std::holds_alternative<ImagePlane>(img) ? 1 : 3;
}

/// Channel views in R, G, B order (single element for grayscale).
inline std::vector<const ImagePlane*> image_planes(const Image& img) {
  if (const auto* p = std::get_if<ImagePlane>(&img)) return {p};
  const auto& rgb = std::get<RgbImage>(img);
  return {&rgb.r, &rgb.g, &rgb.b};
}

inline std::vector<ImagePlane*> image_planes(Image& img) {
  if (auto* p = std::get_if<ImagePlane>(&img)) return {p};
  auto& rgb = std::get<RgbImage>(img);
  return {&rgb.r, &rgb.g, &rgb.b};
}

}  // namespace stegkit
