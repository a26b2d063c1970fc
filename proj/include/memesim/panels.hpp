#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "memesim/image.hpp"

namespace memesim {

struct EdgeMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // 1 = edge

  bool at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
  std::size_t count() const;
};

struct CannyParams {
  double low = 40.0;
  double high = 120.0;
};

/// Gaussian blur (5x5, sigma 1.4), Sobel, non-maximum suppression and
/// hysteresis. Thresholds are on the L2 Sobel magnitude scale.
EdgeMap canny(const GrayImage& img, double low, double high);

enum class Axis { Horizontal, Vertical };

/// An axis-aligned split line. Horizontal separators sit at row `position`,
/// vertical ones at column `position`.
struct Separator {
  Axis axis = Axis::Horizontal;
  int position = 0;
  double support = 0.0;  // edge pixels on the (merged) line, averaged

  bool operator==(const Separator&) const = default;
};

struct SeparatorParams {
  double min_support = 0.85;     // fraction of the perpendicular dimension
  double merge_tolerance = 0.02; // fraction of the dimension along which positions vary
};

/// Hough accumulation restricted to 0 and 90 degrees with 3 px position bins.
std::vector<Separator> detect_separators(const EdgeMap& edges, const SeparatorParams& params = {});

struct SegmentParams {
  CannyParams canny;
  SeparatorParams separators;
  double min_area_fraction = 0.05;
  int max_depth = 3;
};

struct Segment {
  std::string source;
  BBox box;
  RasterImage pixels;
};

struct SegmentSet {
  std::string source;
  std::vector<Segment> segments;

  int n() const { return static_cast<int>(segments.size()); }
};

/// Recursive gutter splitting. An image without separators is one segment.
SegmentSet segment_panels(const RasterImage& img, const std::string& source = {}, const SegmentParams& params = {});

}  // namespace memesim
