#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "convgraph/linear.hpp"
#include "convgraph/matrix.hpp"

namespace convgraph {

/// Class-stratified assignment of examples to 10 folds. Run r tests on the
/// contiguous fold block {r, r+1, r+2} (mod 10) and trains on the other 7,
/// so every example is tested in exactly 3 of the 10 runs.
struct FoldPlan {
  static constexpr int kFolds = 10;
  static constexpr int kTestFolds = 3;

  std::vector<int> fold_of;
  std::uint64_t seed = 0;

  /// y entries are +1/-1. Throws when a class has fewer members than folds
  /// would need to keep every training block two-class.
  static FoldPlan stratified(const std::vector<int>& y, std::uint64_t seed);

  int runs() const { return kFolds; }
  bool is_test(std::size_t example, int run) const;
};

struct ConfusionMatrix {
  long tp = 0, fp = 0, fn = 0, tn = 0;
};

struct ClassMetrics {
  double precision = 0.0, recall = 0.0, f1 = 0.0;  // fractions in [0, 1]
};

/// Metrics of the positive (+1) class and of the negative class.
ClassMetrics positive_class_metrics(const ConfusionMatrix& cm);
ClassMetrics negative_class_metrics(const ConfusionMatrix& cm);

/// Unweighted arithmetic mean of the two per-class F-measures, in [0, 1].
double macro_f(const ConfusionMatrix& cm);
double macro_precision(const ConfusionMatrix& cm);
double macro_recall(const ConfusionMatrix& cm);

struct EvalRun {
  ConfusionMatrix confusion;
  ClassMetrics positive, negative;
  double macro_f = 0.0, macro_precision = 0.0, macro_recall = 0.0;
};

struct EvalReport {
  std::string method;
  std::size_t dimension = 0;
  std::vector<EvalRun> runs;
  double macro_f_mean = 0.0, macro_f_stddev = 0.0;            // fractions
  double macro_precision_mean = 0.0, macro_precision_stddev = 0.0;
  double macro_recall_mean = 0.0, macro_recall_stddev = 0.0;
  // Out-of-training-fold decision score per example, averaged over the 3
  // runs in which the example was tested; safe input for late fusion.
  std::vector<double> scores;
  double wall_seconds = 0.0;

  std::vector<double> per_run_macro_f() const;
};

/// The 10-run protocol: trains a fresh linear model per run (standardization
/// fitted on the training block) and aggregates metrics.
EvalReport kfold_evaluate(const Matrix& x, const std::vector<int>& y, const FoldPlan& plan,
                          const LinearHyperparams& hp);

void save_report(const EvalReport& report, const std::filesystem::path& file);
/// One line: method, dimension, macro F / precision / recall (percent), time.
std::string report_summary_line(const EvalReport& report);

}  // namespace convgraph
