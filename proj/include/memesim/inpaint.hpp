#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "memesim/image.hpp"

namespace memesim {

/// Binary text-region mask; true marks a pixel to be regenerated.
struct TextMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // 0 or 1

  TextMask() = default;
  TextMask(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {}

  bool at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
  void set(int x, int y, bool v = true) { data[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
  std::size_t masked_count() const;
  bool empty() const { return masked_count() == 0; }

  bool operator==(const TextMask&) const = default;
};

/// Sidecar convention: foo.png -> foo.mask.png in the same directory.
std::filesystem::path mask_path_for(const std::filesystem::path& image_path);

/// Reads an 8-bit mask PNG (255 = text, 0 = keep; any nonzero counts as text).
/// Throws DimMismatch, DecodeError or AllMasked.
TextMask load_mask(const std::filesystem::path& path, int expected_w, int expected_h);

/// Loads the sidecar mask for an image if one exists.
std::optional<TextMask> load_sidecar_mask(const std::filesystem::path& image_path, int w, int h);

RasterImage mask_to_raster(const TextMask& mask);

/// Squared Euclidean distance from each pixel to the nearest pixel where
/// `is_site` is true (exact, separable lower-envelope transform).
std::vector<double> squared_distance_transform(int width, int height, const std::vector<std::uint8_t>& is_site);

/// Fast-marching fill without the gradient-transport term: masked pixels are
/// visited in increasing distance-to-known order (ties by row-major index) and
/// each becomes the 1/(1+d^2)-weighted mean of known pixels in its 5x5
/// neighbourhood. Unmasked pixels are copied verbatim.
RasterImage inpaint(const RasterImage& img, const TextMask& mask);

}  // namespace memesim
