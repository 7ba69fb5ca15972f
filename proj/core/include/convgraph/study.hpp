#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "convgraph/eval.hpp"
#include "convgraph/matrix.hpp"

namespace convgraph {

enum class CaptureCategory { Captured, Partial, NotCaptured };

std::string to_string(CaptureCategory category);

/// Category rules: a gain below 0.50 macro-F points means the feature is
/// already captured; a gain of at least 0.50 points is NotCaptured when
/// statistically significant (p < 0.05) and Partial otherwise.
CaptureCategory categorize_capture(double delta_points, double p_value);

struct CaptureVerdict {
  std::string feature_name;
  double baseline_macro_f = 0.0;   // fraction
  double augmented_macro_f = 0.0;  // fraction
  double delta_points = 0.0;       // percentage points
  double p_value = 1.0;
  CaptureCategory category = CaptureCategory::Captured;
};

/// Re-evaluates the embedding with the (standardized) feature appended as
/// one extra column, under the same fold plan, and categorizes the gain.
/// Significance is a paired two-sided t-test over the per-run macro-F
/// values.
CaptureVerdict capture_analysis(const Matrix& embedding, std::span<const double> feature,
                                const std::string& feature_name, const std::vector<int>& y,
                                const FoldPlan& plan, const LinearHyperparams& hp);

struct StudyRow {
  std::string embedding_name;
  std::vector<CaptureVerdict> verdicts;
};

std::string verdict_table(const std::vector<StudyRow>& rows);

/// Standalone image of the verdict grid (green/orange/red cells).
void save_verdict_svg(const std::vector<StudyRow>& rows, const std::filesystem::path& file);

}  // namespace convgraph
