#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "memesim/cart.hpp"
#include "memesim/simfeat.hpp"

namespace memesim {

enum class Task { MM, TM };
enum class PairLabel { Related, Unrelated };

std::string_view task_name(Task t);
Task parse_task(std::string_view s);
std::string_view label_name(PairLabel l);
PairLabel parse_label(std::string_view s);

struct LabeledPair {
  std::string pair_id;
  std::string m;  // path relative to the corpus root
  std::string r;
  PairLabel label = PairLabel::Unrelated;
  Task task = Task::TM;

  bool operator==(const LabeledPair&) const = default;
};

/// Classes for the pair classifier, sorted: index 0 = related, 1 = unrelated.
const std::vector<std::string>& pair_classes();

struct SplitAssignment {
  std::vector<std::size_t> train;  // indices into the pair list, ascending
  std::vector<std::size_t> test;
  bool operator==(const SplitAssignment&) const = default;
};

struct SplitPlan {
  std::uint64_t seed = 0;
  int n_splits = 50;
  double test_fraction = 0.2;
  std::vector<SplitAssignment> splits;
};

/// Stratified random partitions; split j draws from Rng(seed ^ j). Each class
/// contributes round(test_fraction * class size) test rows.
SplitPlan make_splits(const std::vector<LabeledPair>& pairs, std::uint64_t seed, int n_splits, double test_fraction);

/// TP / (TP + FP) on the related class; empty when nothing is predicted related.
std::optional<double> precision_related(const std::vector<PairLabel>& predictions, const std::vector<PairLabel>& truths);

using FeatureTable = std::map<std::string, std::vector<double>>;  // pair_id -> features

/// Per split: fit an unpruned tree on the training rows, predict the test rows,
/// score related-class precision. One value per split, in split order.
std::vector<std::optional<double>> evaluate_measure(const std::vector<LabeledPair>& pairs, const FeatureTable& features,
                                                    const SplitPlan& plan, const cart::TreeParams& params = {},
                                                    unsigned jobs = 1);

struct PrecisionDistribution {
  Task task = Task::TM;
  Measure measure = Measure::KeypointD;
  std::vector<std::optional<double>> precision;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation
  double median = 0.0;
  int undefined_count = 0;
};

struct TestResult {
  std::string id;    // e.g. "mwu:embed_w:MM_vs_TM", "wilcoxon:MM:embed_s_vs_embed_w"
  std::string test;  // "mann_whitney_u" | "wilcoxon_signed"
  double statistic = 0.0;
  double p_value = 1.0;
  int n_a = 0;
  int n_b = 0;
  bool exact = false;
};

struct EvalReport {
  nlohmann::json header;  // effective config, echoed verbatim
  std::vector<PrecisionDistribution> distributions;
  std::vector<TestResult> tests;
  /// Splits in which each measure had the top precision, per task (ties count for all tied).
  std::map<std::string, std::map<std::string, int>> best_counts;

  const PrecisionDistribution* find(Task t, Measure m) const;
  const TestResult* find_test(const std::string& id) const;

  nlohmann::json to_json() const;
  static EvalReport from_json(const nlohmann::json& j);
  std::string to_csv() const;
};

using MeasureResults = std::map<std::pair<Task, Measure>, std::vector<std::optional<double>>>;

/// Distributions for every (task, measure), Mann-Whitney MM vs TM per measure,
/// and paired Wilcoxon segment-vs-whole within MM. Throws IncompleteGrid when a
/// distribution has no defined value.
EvalReport compile_report(const MeasureResults& results, const nlohmann::json& header);

}  // namespace memesim
