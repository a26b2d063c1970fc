#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "memesim/corpus.hpp"
#include "memesim/orb.hpp"
#include "memesim/panels.hpp"
#include "memesim/simfeat.hpp"

namespace memesim {

/// Effective run configuration. Precedence: flags > config file > defaults.
struct RunConfig {
  std::filesystem::path out = "data";  // workspace: corpus, models, cache, report
  std::filesystem::path corpus;        // defaults to `out`
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  int n_splits = 50;
  double test_fraction = 0.2;
  std::vector<Measure> measures{kAllMeasures.begin(), kAllMeasures.end()};
  std::string provider = "builtin";  // or "sidecar:<path>"
  std::string blank_model = "models/blank_tree.json";  // relative to `out`
  int folds = 10;
  SegmentParams segment;
  OrbParams orb;
  FeatureOptions features;
  CorpusParams corpus_params;

  std::filesystem::path corpus_root() const { return corpus.empty() ? out : corpus; }
  std::filesystem::path blank_model_path() const { return out / blank_model; }

  /// Every setting, as the key=value names accepted by apply_setting.
  nlohmann::json to_json() const;
  /// Settings that change featurize output.
  nlohmann::json featurize_json() const;
};

/// Applies one key=value setting. Throws Error{Config} on unknown keys or bad values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

/// Simple config format: one `key = value` per line; blank lines and lines
/// starting with '#' are ignored.
void apply_config_file(RunConfig& cfg, const std::filesystem::path& path);
void apply_config_text(RunConfig& cfg, const std::string& text, const std::string& origin = "<config>");

/// 16 hex digits of FNV-1a over the given bytes.
std::string fingerprint_hex(std::string_view bytes);

}  // namespace memesim
