#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace memesim::cart {

/// Row-major feature matrix.
struct Dataset {
  std::size_t n_features = 0;
  std::vector<double> values;  // rows * n_features
  std::vector<int> labels;     // class index per row

  std::size_t rows() const { return labels.size(); }
  std::span<const double> row(std::size_t i) const { return {values.data() + i * n_features, n_features}; }
  void add(std::span<const double> x, int label);
};

struct TreeParams {
  int min_samples_leaf = 1;
  std::optional<int> max_depth;  // unlimited when empty
};

/// Preorder node list. Internal nodes have left/right >= 0; leaves have -1.
struct Node {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  std::vector<long> counts;  // per class, training samples reaching the node
  int label = 0;             // argmax(counts), ties to the lower class index

  bool is_leaf() const { return left < 0; }
};

/// Binary CART classifier. Class names are kept sorted, so class index order is
/// lexicographic and the leaf tie rule "lower index wins" is the lexicographic rule.
class DecisionTree {
 public:
  DecisionTree() = default;

  bool trained() const { return !nodes_.empty(); }
  std::size_t n_features() const { return n_features_; }
  const std::vector<std::string>& classes() const { return classes_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const TreeParams& params() const { return params_; }
  std::size_t leaf_count() const;
  long training_samples() const;

  int predict(std::span<const double> x) const;
  const std::string& predict_name(std::span<const double> x) const { return classes_[static_cast<std::size_t>(predict(x))]; }

  /// Copy with the subtree under `node` replaced by a leaf. Node ids are renumbered.
  DecisionTree collapsed(const std::vector<bool>& collapse_mask) const;

  nlohmann::json to_json() const;
  static DecisionTree from_json(const nlohmann::json& j);
  std::string serialize() const;
  static DecisionTree deserialize(const std::string& text);

  bool operator==(const DecisionTree&) const;

 private:
  friend DecisionTree fit_tree(const Dataset&, const std::vector<std::string>&, const TreeParams&);
  std::size_t n_features_ = 0;
  std::vector<std::string> classes_;
  std::vector<Node> nodes_;
  TreeParams params_;
};

/// Greedy Gini CART. Candidate thresholds are midpoints of consecutive sorted
/// unique values; equal-gain ties go to the lower feature index, then the lower
/// threshold. `classes` must be sorted and match the label indices in `data`.
DecisionTree fit_tree(const Dataset& data, const std::vector<std::string>& classes, const TreeParams& params = {});

struct PruneSequence {
  std::vector<double> alphas;
  std::vector<DecisionTree> trees;

  /// Subtree in force at complexity `alpha`.
  const DecisionTree& at(double alpha) const;
};

/// Weakest-link pruning. Cost R is the training misclassification rate.
PruneSequence mccp_sequence(const DecisionTree& tree);

struct CvRow {
  double alpha = 0.0;
  int fold = 0;
  double objective = 0.0;
  std::optional<double> precision;  // empty when the fold had no positive predictions
};

struct CvResult {
  double alpha = 0.0;
  double mean_objective = 0.0;
  std::vector<double> candidates;
  std::vector<CvRow> table;
};

/// Stratified k-fold selection of the pruning complexity. The objective is
/// precision on `positive_class` (undefined precision scores 0). Candidates are
/// geometric midpoints of the pooled per-fold alphas plus the largest pooled
/// alpha; ties go to the larger alpha.
CvResult cv_select_alpha(const Dataset& data, const std::vector<std::string>& classes, int folds, int positive_class,
                         std::uint64_t seed, const TreeParams& params = {});

/// Fold index per row (stratified, seeded).
std::vector<int> stratified_folds(const std::vector<int>& labels, int folds, std::uint64_t seed);

}  // namespace memesim::cart
