#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "memesim/blank.hpp"
#include "memesim/config.hpp"
#include "memesim/error.hpp"
#include "memesim/eval.hpp"
#include "memesim/hashembed.hpp"
#include "memesim/simfeat.hpp"

namespace memesim {

/// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // invalid configuration or malformed input
  kExitIo = 2,
  kExitMissingInput = 3,
  kExitStaleCache = 4,
  kExitIncomplete = 5,
  kExitInsufficientData = 6,
};

int exit_code_for(ErrorCode code);

struct CacheLayout {
  static constexpr const char* kFeatures = "cache/features.jsonl";
  static constexpr const char* kMeta = "cache/features.meta.json";
  static constexpr const char* kDescriptors = "cache/descriptors.kpd";
  static constexpr const char* kReportJson = "report/report.json";
  static constexpr const char* kReportCsv = "report/report.csv";
  static constexpr const char* kBlankCv = "models/blank_cv.csv";
  static constexpr const char* kBlankSummary = "models/blank_summary.json";
};

std::unique_ptr<EmbeddingProvider> make_provider(const RunConfig& cfg);

/// Inpaint (when a mask is given), segment, drop blank segments, then hash,
/// embed and describe the inpainted image and its segments.
ImageArtifacts compute_artifacts(const RasterImage& raw, const std::optional<TextMask>& mask, const std::string& image_id,
                                 const cart::DecisionTree& blank_model, const EmbeddingProvider& provider, const RunConfig& cfg);

/// Loads `rel` under the corpus root with its sidecar mask and computes artifacts.
ImageArtifacts artifacts_for_file(const std::filesystem::path& root, const std::string& rel, const cart::DecisionTree& blank_model,
                                  const EmbeddingProvider& provider, const RunConfig& cfg);

/// The six measures for every pair of one task. Rows are pair-major, measure
/// order as in kAllMeasures. `art` maps image path -> artifacts.
std::vector<SimilarityFeatures> task_features(const std::vector<LabeledPair>& pairs, const std::map<std::string, ImageArtifacts>& art,
                                              const RunConfig& cfg);

/// Featurize fingerprint: effective feature settings plus the bytes of the
/// manifests and the blank model.
std::string featurize_fingerprint(const RunConfig& cfg);

std::vector<LabeledPair> load_task_pairs(const RunConfig& cfg, Task task);

int cmd_corpus_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_train_blank(const RunConfig& cfg, const std::filesystem::path& manifest, std::ostream& out, std::ostream& err);
int cmd_featurize(const RunConfig& cfg, bool force, std::ostream& out, std::ostream& err);
int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace memesim
