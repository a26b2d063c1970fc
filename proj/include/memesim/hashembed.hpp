#pragma once

#include <bit>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "memesim/image.hpp"

namespace memesim {

/// 64 pHash bits. Bit i (row-major over the 8x8 DCT block) is stored at
/// position 63 - i, so the hex form reads in block order.
struct Hash64 {
  std::uint64_t bits = 0;

  bool bit(int i) const { return (bits >> (63 - i)) & 1U; }
  void set(int i) { bits |= std::uint64_t{1} << (63 - i); }
  std::string to_hex() const;
  static Hash64 from_hex(const std::string& hex);
  bool operator==(const Hash64&) const = default;
};

inline int hamming(Hash64 a, Hash64 b) { return std::popcount(a.bits ^ b.bits); }

/// Orthonormal 2-D DCT-II of a square block.
std::vector<double> dct2_orthonormal(const std::vector<double>& block, int n);

/// Coefficients with magnitude below this are treated as exactly zero before
/// the median comparison, so analytically-zero AC terms do not flip bits.
inline constexpr double kPhashZeroSnap = 1e-7;

/// gray -> bilinear 32x32 -> DCT-II -> top-left 8x8 -> bit = coef > median(64).
Hash64 phash(const RasterImage& img);
Hash64 phash(const GrayImage& gray);

struct Embedding {
  std::vector<double> vec;
  bool operator==(const Embedding&) const = default;
};

/// 1 - a.b, exactly 0 for identical vectors. Throws DimMismatch for unequal lengths.
double cosine_distance(const Embedding& a, const Embedding& b);

/// L2-normalises in place; returns the norm before normalisation.
double l2_normalize(std::vector<double>& v);

enum class ProviderSource { BuiltIn, Sidecar };

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::string name() const = 0;
  virtual std::size_t dim() const = 0;
  virtual ProviderSource source() const = 0;
  /// `image_id` identifies the image (segments use "<image id>#seg<k>").
  virtual Embedding embed(const RasterImage& img, const std::string& image_id) const = 0;
};

/// Grid descriptor: gray -> 224x224 -> 4x4 cells; per cell an 8-bin
/// magnitude-weighted Sobel orientation histogram and an 8-bin intensity
/// histogram, each normalised to unit mass; +1e-6; L2 normalised. 256 dims.
class BuiltinEmbedder final : public EmbeddingProvider {
 public:
  static constexpr int kSide = 224;
  static constexpr int kGrid = 4;
  static constexpr int kBins = 8;
  static constexpr double kEpsilon = 1e-6;

  std::string name() const override { return "builtin-grid"; }
  std::size_t dim() const override { return kGrid * kGrid * kBins * 2; }
  ProviderSource source() const override { return ProviderSource::BuiltIn; }
  Embedding embed(const RasterImage& img, const std::string& image_id = {}) const override;
  Embedding embed_gray(const GrayImage& gray) const;
};

/// Vectors loaded once from JSONL rows {"image_id": str, "vec": [real, ...]}.
class SidecarEmbeddings final : public EmbeddingProvider {
 public:
  static SidecarEmbeddings load(const std::filesystem::path& path);

  std::string name() const override { return "sidecar:" + origin_; }
  std::size_t dim() const override { return dim_; }
  ProviderSource source() const override { return ProviderSource::Sidecar; }
  Embedding embed(const RasterImage& img, const std::string& image_id) const override;

  /// Rows whose vectors were not unit length and were normalised on load.
  int renormalized() const { return renormalized_; }
  std::size_t size() const { return table_.size(); }

 private:
  std::string origin_;
  std::size_t dim_ = 0;
  int renormalized_ = 0;
  std::map<std::string, Embedding> table_;
};

}  // namespace memesim
