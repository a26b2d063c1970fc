#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "memesim/cart.hpp"
#include "memesim/image.hpp"
#include "memesim/panels.hpp"

namespace memesim {

struct BlankFeatures {
  double shannon_entropy = 0.0;     // bits, 256-bin gray histogram
  double aspect_ratio = 1.0;        // w / h
  double saliency_entropy = 0.0;    // bits, 256-bin histogram of the saliency map
  double laplacian_variance = 0.0;  // population variance of the 3x3 Laplacian

  std::array<double, 4> as_array() const { return {shannon_entropy, aspect_ratio, saliency_entropy, laplacian_variance}; }
};

inline const std::vector<std::string>& blank_classes() {
  static const std::vector<std::string> classes{"blank", "non-blank"};
  return classes;
}
inline constexpr int kBlankClass = 0;
inline constexpr int kNonBlankClass = 1;

/// Entropy in bits of a 256-bin histogram of values rounded and clamped to [0,255].
double shannon_entropy(const GrayImage& img);

/// Spectral-residual saliency on a 64x64 resize: log amplitude minus its 3x3
/// box average, inverse transform with the original phase, squared magnitude,
/// Gaussian blur (sigma 2.5).
GrayImage spectral_residual_saliency(const GrayImage& img);

/// Entropy of the saliency map after min-max scaling to [0,255].
double saliency_entropy(const GrayImage& img);

double laplacian_variance(const GrayImage& img);

BlankFeatures blank_features(const RasterImage& segment);
inline BlankFeatures blank_features(const Segment& seg) { return blank_features(seg.pixels); }

/// Removes segments the model calls blank. If every segment is blank the
/// largest one (first in order on ties) is kept.
SegmentSet filter_blanks(const SegmentSet& set, const cart::DecisionTree& model);

struct BlankSample {
  std::filesystem::path segment_path;
  int label = kBlankClass;
};

/// JSONL rows {"segment_path": str, "label": "blank"|"non-blank"}; relative
/// paths resolve against the manifest's directory.
std::vector<BlankSample> load_blank_manifest(const std::filesystem::path& path);

struct BlankTraining {
  cart::DecisionTree model;  // retrained on all rows with the selected alpha
  cart::CvResult cv;
  int folds = 10;
  long n_blank = 0;
  long n_non_blank = 0;
};

/// Full tree per fold, weakest-link pruning, alpha chosen by stratified CV on
/// non-blank precision, then a fresh fit on all rows pruned at that alpha.
BlankTraining train_blank_filter(const cart::Dataset& features, int folds, std::uint64_t seed);

cart::Dataset blank_dataset(const std::vector<BlankFeatures>& feats, const std::vector<int>& labels);

}  // namespace memesim
