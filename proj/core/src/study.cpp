#include "convgraph/study.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "convgraph/stats.hpp"

namespace convgraph {

std::string to_string(CaptureCategory category) {
  switch (category) {
    case CaptureCategory::Captured:
      return "captured";
    case CaptureCategory::Partial:
      return "partial";
    case CaptureCategory::NotCaptured:
      return "not_captured";
  }
  return "captured";
}

CaptureCategory categorize_capture(double delta_points, double p_value) {
  if (delta_points < 0.50) return CaptureCategory::Captured;
  return p_value < 0.05 ? CaptureCategory::NotCaptured : CaptureCategory::Partial;
}

CaptureVerdict capture_analysis(const Matrix& embedding, std::span<const double> feature,
                                const std::string& feature_name, const std::vector<int>& y,
                                const FoldPlan& plan, const LinearHyperparams& hp) {
  if (feature.size() != embedding.rows() || y.size() != embedding.rows()) {
    throw std::invalid_argument("capture_analysis: row count mismatch");
  }
  if (plan.fold_of.size() != y.size()) {
    throw std::invalid_argument("capture_analysis: fold plan does not match the corpus");
  }

  const double f_mean = mean(feature);
  double variance = 0.0;
  for (double v : feature) variance += (v - f_mean) * (v - f_mean);
  const double f_std = std::sqrt(variance / static_cast<double>(feature.size()));
  const double scale = f_std > 1e-12 ? 1.0 / f_std : 0.0;

  Matrix augmented(embedding.rows(), embedding.cols() + 1);
  for (std::size_t i = 0; i < embedding.rows(); ++i) {
    for (std::size_t j = 0; j < embedding.cols(); ++j) augmented(i, j) = embedding(i, j);
    augmented(i, embedding.cols()) = (feature[i] - f_mean) * scale;
  }

  const EvalReport baseline = kfold_evaluate(embedding, y, plan, hp);
  const EvalReport enriched = kfold_evaluate(augmented, y, plan, hp);

  CaptureVerdict verdict;
  verdict.feature_name = feature_name;
  verdict.baseline_macro_f = baseline.macro_f_mean;
  verdict.augmented_macro_f = enriched.macro_f_mean;
  verdict.delta_points = 100.0 * (enriched.macro_f_mean - baseline.macro_f_mean);
  const auto base_runs = baseline.per_run_macro_f();
  const auto aug_runs = enriched.per_run_macro_f();
  verdict.p_value = paired_t_test_p(aug_runs, base_runs);
  verdict.category = categorize_capture(verdict.delta_points, verdict.p_value);
  return verdict;
}

std::string verdict_table(const std::vector<StudyRow>& rows) {
  std::ostringstream out;
  out << "embedding\tfeature\tbaseline_f\taugmented_f\tdelta_points\tp_value\tcategory\n";
  char buf[64];
  for (const StudyRow& row : rows) {
    for (const CaptureVerdict& v : row.verdicts) {
      std::snprintf(buf, sizeof(buf), "%.2f\t%.2f\t%+.2f\t%.4f",
                    100.0 * v.baseline_macro_f, 100.0 * v.augmented_macro_f, v.delta_points,
                    v.p_value);
      out << row.embedding_name << '\t' << v.feature_name << '\t' << buf << '\t'
          << to_string(v.category) << '\n';
    }
  }
  return out.str();
}

void save_verdict_svg(const std::vector<StudyRow>& rows, const std::filesystem::path& file) {
  if (rows.empty()) throw std::invalid_argument("verdict plot: no rows");
  const std::size_t n_features = rows.front().verdicts.size();
  constexpr int kCell = 28;
  constexpr int kLeft = 220;
  constexpr int kTop = 160;
  const int width = kLeft + kCell * static_cast<int>(rows.size()) + 20;
  const int height = kTop + kCell * static_cast<int>(n_features) + 20;

  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t c = 0; c < rows.size(); ++c) {
    const int x = kLeft + static_cast<int>(c) * kCell + kCell / 2;
    out << "<text x=\"" << x << "\" y=\"" << kTop - 8 << "\" text-anchor=\"start\" "
        << "transform=\"rotate(-60 " << x << ' ' << kTop - 8 << ")\">"
        << rows[c].embedding_name << "</text>\n";
  }
  for (std::size_t r = 0; r < n_features; ++r) {
    out << "<text x=\"" << kLeft - 6 << "\" y=\""
        << kTop + static_cast<int>(r) * kCell + kCell / 2 + 4
        << "\" text-anchor=\"end\">" << rows.front().verdicts[r].feature_name << "</text>\n";
  }
  for (std::size_t c = 0; c < rows.size(); ++c) {
    for (std::size_t r = 0; r < rows[c].verdicts.size(); ++r) {
      const char* fill = "#4caf50";
      if (rows[c].verdicts[r].category == CaptureCategory::Partial) fill = "#ff9800";
      if (rows[c].verdicts[r].category == CaptureCategory::NotCaptured) fill = "#f44336";
      char cell[256];
      std::snprintf(cell, sizeof(cell),
                    "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" fill=\"%s\" "
                    "stroke=\"white\"/><title>%+.2f (p=%.3f)</title>\n",
                    kLeft + static_cast<int>(c) * kCell, kTop + static_cast<int>(r) * kCell,
                    kCell, kCell, fill, rows[c].verdicts[r].delta_points,
                    rows[c].verdicts[r].p_value);
      out << cell;
    }
  }
  out << "</svg>\n";
}

}  // namespace convgraph
