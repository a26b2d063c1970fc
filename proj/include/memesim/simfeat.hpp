#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "memesim/hashembed.hpp"
#include "memesim/orb.hpp"

namespace memesim {

enum class Measure { KeypointD, KeypointM, EmbedW, HashW, EmbedS, HashS };

inline constexpr std::array<Measure, 6> kAllMeasures = {Measure::KeypointD, Measure::KeypointM, Measure::EmbedW,
                                                        Measure::HashW,     Measure::EmbedS,    Measure::HashS};

std::string_view measure_name(Measure m);
Measure parse_measure(std::string_view name);
std::size_t measure_dim(Measure m);

enum class Backend { Embed, Hash };
enum class Granularity { Whole, Segment };

/// MostSimilarFirst: rank 1 is the smallest distance. LiteralDescending: rank 1
/// is the largest value.
enum class RankDirection { MostSimilarFirst, LiteralDescending };
enum class SpreadMode { Range, Iqr };
enum class MomentSource { Distances, Cumulative };

struct FeatureOptions {
  RankDirection rank_direction = RankDirection::MostSimilarFirst;
  SpreadMode spread = SpreadMode::Range;
  MomentSource moments = MomentSource::Distances;
};

struct SimilarityFeatures {
  Measure measure = Measure::KeypointD;
  std::string pair_id;
  std::vector<double> features;
};

/// Everything the six measures need from one (inpainted) image.
struct ImageArtifacts {
  std::string id;
  Hash64 hash;
  Embedding embedding;
  std::vector<Hash64> segment_hashes;
  std::vector<Embedding> segment_embeddings;
  std::vector<Descriptor256> descriptors;

  int n_segments() const { return static_cast<int>(segment_hashes.size()); }
};

double whole_distance(const ImageArtifacts& a, const ImageArtifacts& b, Backend backend);
/// All segment pair distances, row-major (segments of a) x (segments of b).
std::vector<double> segment_distances(const ImageArtifacts& a, const ImageArtifacts& b, Backend backend);

/// Competition rank of `score` within `pool` (ties share the smallest rank).
/// Throws ScoreNotInPool when the exact value is absent.
int rank(double score, std::span<const double> pool, RankDirection dir = RankDirection::MostSimilarFirst);

/// Per-meme score pools against the whole reference set R.
class RankContext {
 public:
  RankContext() = default;
  RankContext(Backend backend, Granularity granularity, RankDirection direction)
      : backend_(backend), granularity_(granularity), direction_(direction) {}

  Backend backend() const { return backend_; }
  Granularity granularity() const { return granularity_; }
  RankDirection direction() const { return direction_; }

  bool has(const std::string& meme_id) const { return pools_.count(meme_id) != 0; }
  /// Sorted ascending.
  const std::vector<double>& pool(const std::string& meme_id) const;
  int rank_of(const std::string& meme_id, double score) const;

  void set_pool(const std::string& meme_id, std::vector<double> scores);

 private:
  Backend backend_ = Backend::Embed;
  Granularity granularity_ = Granularity::Whole;
  RankDirection direction_ = RankDirection::MostSimilarFirst;
  std::map<std::string, std::vector<double>> pools_;
};

/// Throws EmptyReferenceSet when `refs` is empty.
RankContext build_rank_context(const std::vector<const ImageArtifacts*>& memes, const std::vector<const ImageArtifacts*>& refs,
                               Backend backend, Granularity granularity,
                               RankDirection direction = RankDirection::MostSimilarFirst, unsigned jobs = 1);

/// [distance, rank] for Embed-W / Hash-W.
SimilarityFeatures whole_image_features(const std::string& pair_id, const ImageArtifacts& m, const ImageArtifacts& r,
                                        const RankContext& ctx, Backend backend);

/// [mean, min, max, spread, min_rank, max_rank, n_m, n_r] for Embed-S / Hash-S.
SimilarityFeatures segment_features(const std::string& pair_id, const ImageArtifacts& m, const ImageArtifacts& r,
                                    const RankContext& ctx, Backend backend, const FeatureOptions& opts = {});

enum class KeypointVariant { D, M };

/// D: the 201 values of F. M: the four moments.
SimilarityFeatures keypoint_features(const std::string& pair_id, const ImageArtifacts& m, const ImageArtifacts& r,
                                     KeypointVariant variant, const FeatureOptions& opts = {});

/// Linear-interpolated quantile of sorted data.
double quantile_sorted(std::span<const double> sorted, double q);

/// Feature cache: features.jsonl rows {"pair_id","measure","features"} plus a
/// meta JSON holding the config fingerprint.
struct FeatureCache {
  std::string fingerprint;
  nlohmann::json config;
  std::vector<SimilarityFeatures> rows;
};

void write_feature_cache(const std::filesystem::path& jsonl, const std::filesystem::path& meta, const FeatureCache& cache);
FeatureCache read_feature_cache(const std::filesystem::path& jsonl, const std::filesystem::path& meta);
/// Reads only the fingerprint; empty when the meta file is absent.
std::string read_cache_fingerprint(const std::filesystem::path& meta);

}  // namespace memesim
