#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace memesim {

/// 8-bit raster, row-major, channel-interleaved. channels is 1 (gray) or 3 (RGB).
struct RasterImage {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> data;

  RasterImage() = default;
  RasterImage(int w, int h, int c, std::uint8_t fill = 0);

  std::uint8_t& at(int x, int y, int c = 0) { return data[(static_cast<std::size_t>(y) * width + x) * channels + c]; }
  std::uint8_t at(int x, int y, int c = 0) const { return data[(static_cast<std::size_t>(y) * width + x) * channels + c]; }
  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }

  bool operator==(const RasterImage&) const = default;
};

/// Real-valued single-channel working image, values nominally in [0,255].
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> data;

  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0) : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  double& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  /// Clamp-to-edge access.
  double clamped(int x, int y) const;

  bool operator==(const GrayImage&) const = default;
};

struct BBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  long area() const { return static_cast<long>(w) * h; }
  bool contains(const BBox& o) const { return o.x >= x && o.y >= y && o.x + o.w <= x + w && o.y + o.h <= y + h; }
  bool overlaps(const BBox& o) const { return x < o.x + o.w && o.x < x + w && y < o.y + o.h && o.y < y + h; }
  bool operator==(const BBox&) const = default;
};

/// Small dense kernel, row-major, odd dimensions.
struct Kernel {
  int width = 0;
  int height = 0;
  std::vector<double> values;
};

/// Decodes PNG or JPEG. Alpha is composited over white; gray inputs stay 1-channel.
/// Throws Error{Io} when the file cannot be read and Error{Decode} on bad data.
RasterImage load_image(const std::filesystem::path& path);
RasterImage decode_image(std::span<const std::uint8_t> bytes);

/// Lossless PNG encoding (deterministic byte output for identical input).
std::vector<std::uint8_t> encode_png(const RasterImage& img);
void save_png(const RasterImage& img, const std::filesystem::path& path);

/// 0.299R + 0.587G + 0.114B; 1-channel input passes through.
GrayImage to_grayscale(const RasterImage& img);

/// Rounds and clamps to [0,255].
RasterImage to_raster(const GrayImage& img);

/// Bilinear resize with half-pixel-centred sampling.
GrayImage resize_bilinear(const GrayImage& img, int w, int h);
RasterImage resize_bilinear(const RasterImage& img, int w, int h);
RasterImage resize_nearest(const RasterImage& img, int w, int h);

/// Same-size correlation with clamp-to-edge borders. Kernel dims must be odd.
GrayImage convolve(const GrayImage& img, const Kernel& kernel);

Kernel gaussian_kernel(int size, double sigma);
Kernel box_kernel(int size);
Kernel laplacian_kernel();
Kernel sobel_x_kernel();
Kernel sobel_y_kernel();

RasterImage crop(const RasterImage& img, const BBox& box);
GrayImage crop(const GrayImage& img, const BBox& box);

}  // namespace memesim
