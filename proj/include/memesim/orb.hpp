#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "memesim/image.hpp"

namespace memesim {

struct Keypoint {
  double x = 0.0;  // level-0 coordinates
  double y = 0.0;
  double orientation = 0.0;  // radians, [-pi, pi]
  double response = 0.0;     // Harris score
  int octave = 0;
  int level_x = 0;  // integer position on its pyramid level
  int level_y = 0;
};

struct Descriptor256 {
  std::array<std::uint64_t, 4> words{};

  bool bit(int i) const { return (words[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1U; }
  void set(int i) { words[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
  bool operator==(const Descriptor256&) const = default;
};

inline int hamming(const Descriptor256& a, const Descriptor256& b) {
  int d = 0;
  for (std::size_t i = 0; i < 4; ++i) d += std::popcount(a.words[i] ^ b.words[i]);
  return d;
}

struct OrbParams {
  int max_keypoints = 500;
  int fast_threshold = 20;
  int levels = 8;
  double scale_factor = 1.2;
  int orientation_bins = 30;
};

/// Canonical 256 point-pair sampling pattern (x1, y1, x2, y2), patch size 31.
extern const std::array<std::array<std::int8_t, 4>, 256> kBriefPattern;

/// Level images of a scale pyramid (bilinear downsampling from level 0).
std::vector<GrayImage> build_pyramid(const GrayImage& img, const OrbParams& params);

/// FAST-9 segment test at one pixel: 9 contiguous circle pixels all brighter
/// than I+t or all darker than I-t.
bool is_fast_corner(const GrayImage& img, int x, int y, int threshold);

std::vector<Keypoint> detect_oriented_fast(const GrayImage& img, const OrbParams& params = {});

struct DescribeResult {
  std::vector<Keypoint> keypoints;  // survivors, aligned with descriptors
  std::vector<Descriptor256> descriptors;
  int dropped = 0;  // keypoints whose rotated pattern left the image
};

DescribeResult compute_rbrief(const GrayImage& img, const std::vector<Keypoint>& kps, const OrbParams& params = {});

/// Detection plus description in one pass over a shared pyramid.
DescribeResult orb_features(const GrayImage& img, const OrbParams& params = {});

/// Nearest-match Hamming distance from each descriptor of `m` to any of `r`.
/// Empty when either side is empty.
std::vector<int> match_distances(const std::vector<Descriptor256>& m, const std::vector<Descriptor256>& r);

inline constexpr int kDistanceCap = 200;

/// F[x] = |{d : d <= x}| for x = 0..200.
struct DistanceDistribution {
  std::array<long, kDistanceCap + 1> F{};
};

DistanceDistribution distance_distribution(const std::vector<int>& distances);

struct MomentVector {
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;

  std::array<double, 4> as_array() const { return {mean, variance, skewness, excess_kurtosis}; }
};

/// Population moments. Empty input gives zeros; zero variance gives zero
/// skewness and kurtosis.
MomentVector distribution_moments(const std::vector<double>& values);
MomentVector distribution_moments(const std::vector<int>& distances);

/// Legacy rule: F[d_max] >= c_min. Throws InvalidDmax for d_max outside [0,200].
bool threshold_match(const DistanceDistribution& F, int d_max, long c_min);

/// "KPD1" binary cache: magic, u32 record count, then per record
/// u32 id length, id bytes, u32 keypoint count, 32 bytes per descriptor.
/// All integers little-endian.
struct DescriptorRecord {
  std::string image_id;
  std::vector<Descriptor256> descriptors;
  bool operator==(const DescriptorRecord&) const = default;
};

std::vector<std::uint8_t> encode_descriptor_cache(const std::vector<DescriptorRecord>& records);
std::vector<DescriptorRecord> decode_descriptor_cache(const std::vector<std::uint8_t>& bytes);
void write_descriptor_cache(const std::filesystem::path& path, const std::vector<DescriptorRecord>& records);
std::vector<DescriptorRecord> read_descriptor_cache(const std::filesystem::path& path);

}  // namespace memesim

namespace memesim {

/// atan2(m01, m10) of the intensity centroid over a radius-15 disc.
double intensity_centroid_angle(const GrayImage& level, int x, int y);

}  // namespace memesim
