#include "convgraph/eval.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "convgraph/rng.hpp"
#include "convgraph/stats.hpp"

namespace convgraph {

FoldPlan FoldPlan::stratified(const std::vector<int>& y, std::uint64_t seed) {
  FoldPlan plan;
  plan.seed = seed;
  plan.fold_of.assign(y.size(), 0);

  Rng rng(seed);
  for (int cls : {+1, -1}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == cls) members.push_back(i);
    }
    if (members.size() < static_cast<std::size_t>(kFolds - kTestFolds)) {
      throw std::invalid_argument(
          "stratification degenerate: class " + std::to_string(cls) + " has only " +
          std::to_string(members.size()) + " examples");
    }
    rng.shuffle(members);
    for (std::size_t i = 0; i < members.size(); ++i) {
      plan.fold_of[members[i]] = static_cast<int>(i % kFolds);
    }
  }
  return plan;
}

bool FoldPlan::is_test(std::size_t example, int run) const {
  const int fold = fold_of[example];
  for (int k = 0; k < kTestFolds; ++k) {
    if (fold == (run + k) % kFolds) return true;
  }
  return false;
}

namespace {

double f1_of(double precision, double recall) {
  return precision + recall > 0.0 ? 2.0 * precision * recall / (precision + recall) : 0.0;
}

}  // namespace

ClassMetrics positive_class_metrics(const ConfusionMatrix& cm) {
  ClassMetrics m;
  m.precision = cm.tp + cm.fp > 0 ? static_cast<double>(cm.tp) / (cm.tp + cm.fp) : 0.0;
  m.recall = cm.tp + cm.fn > 0 ? static_cast<double>(cm.tp) / (cm.tp + cm.fn) : 0.0;
  m.f1 = f1_of(m.precision, m.recall);
  return m;
}

ClassMetrics negative_class_metrics(const ConfusionMatrix& cm) {
  ClassMetrics m;
  m.precision = cm.tn + cm.fn > 0 ? static_cast<double>(cm.tn) / (cm.tn + cm.fn) : 0.0;
  m.recall = cm.tn + cm.fp > 0 ? static_cast<double>(cm.tn) / (cm.tn + cm.fp) : 0.0;
  m.f1 = f1_of(m.precision, m.recall);
  return m;
}

double macro_f(const ConfusionMatrix& cm) {
  return 0.5 * (positive_class_metrics(cm).f1 + negative_class_metrics(cm).f1);
}

double macro_precision(const ConfusionMatrix& cm) {
  return 0.5 * (positive_class_metrics(cm).precision + negative_class_metrics(cm).precision);
}

double macro_recall(const ConfusionMatrix& cm) {
  return 0.5 * (positive_class_metrics(cm).recall + negative_class_metrics(cm).recall);
}

std::vector<double> EvalReport::per_run_macro_f() const {
  std::vector<double> values;
  values.reserve(runs.size());
  for (const EvalRun& run : runs) values.push_back(run.macro_f);
  return values;
}

EvalReport kfold_evaluate(const Matrix& x, const std::vector<int>& y, const FoldPlan& plan,
                          const LinearHyperparams& hp) {
  if (x.rows() != y.size() || y.size() != plan.fold_of.size()) {
    throw std::invalid_argument("kfold_evaluate: feature/label/plan size mismatch");
  }
  const auto started = std::chrono::steady_clock::now();

  EvalReport report;
  report.dimension = x.cols();
  report.scores.assign(y.size(), 0.0);
  std::vector<int> tested_count(y.size(), 0);

  for (int run = 0; run < plan.runs(); ++run) {
    std::vector<std::size_t> train_rows, test_rows;
    for (std::size_t i = 0; i < y.size(); ++i) {
      (plan.is_test(i, run) ? test_rows : train_rows).push_back(i);
    }
    const LinearModel model = train_linear_rows(x, y, train_rows, hp);

    EvalRun result;
    for (std::size_t i : test_rows) {
      const double score = model.decision_score(x.row(i));
      report.scores[i] += score;
      tested_count[i] += 1;
      const int predicted = score >= 0.0 ? +1 : -1;
      if (y[i] > 0) {
        (predicted > 0 ? result.confusion.tp : result.confusion.fn) += 1;
      } else {
        (predicted > 0 ? result.confusion.fp : result.confusion.tn) += 1;
      }
    }
    result.positive = positive_class_metrics(result.confusion);
    result.negative = negative_class_metrics(result.confusion);
    result.macro_f = macro_f(result.confusion);
    result.macro_precision = macro_precision(result.confusion);
    result.macro_recall = macro_recall(result.confusion);
    report.runs.push_back(result);
  }

  for (std::size_t i = 0; i < y.size(); ++i) {
    report.scores[i] /= static_cast<double>(tested_count[i]);
  }

  std::vector<double> f_values, p_values, r_values;
  for (const EvalRun& run : report.runs) {
    f_values.push_back(run.macro_f);
    p_values.push_back(run.macro_precision);
    r_values.push_back(run.macro_recall);
  }
  report.macro_f_mean = mean(f_values);
  report.macro_f_stddev = sample_stddev(f_values);
  report.macro_precision_mean = mean(p_values);
  report.macro_precision_stddev = sample_stddev(p_values);
  report.macro_recall_mean = mean(r_values);
  report.macro_recall_stddev = sample_stddev(r_values);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

namespace {

std::string pct(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * fraction);
  return buf;
}

}  // namespace

void save_report(const EvalReport& report, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
  out << "method\t" << report.method << '\n';
  out << "dimension\t" << report.dimension << '\n';
  out << "runs\t" << report.runs.size() << '\n';
  out << "macro_f\t" << pct(report.macro_f_mean) << " +- " << pct(report.macro_f_stddev)
      << '\n';
  out << "macro_precision\t" << pct(report.macro_precision_mean) << " +- "
      << pct(report.macro_precision_stddev) << '\n';
  out << "macro_recall\t" << pct(report.macro_recall_mean) << " +- "
      << pct(report.macro_recall_stddev) << '\n';
  out << "wall_seconds\t" << report.wall_seconds << '\n';
  out << "run\ttp\tfp\tfn\ttn\tmacro_f\tpos_p\tpos_r\tpos_f\tneg_p\tneg_r\tneg_f\n";
  for (std::size_t r = 0; r < report.runs.size(); ++r) {
    const EvalRun& run = report.runs[r];
    out << r << '\t' << run.confusion.tp << '\t' << run.confusion.fp << '\t'
        << run.confusion.fn << '\t' << run.confusion.tn << '\t' << pct(run.macro_f) << '\t'
        << pct(run.positive.precision) << '\t' << pct(run.positive.recall) << '\t'
        << pct(run.positive.f1) << '\t' << pct(run.negative.precision) << '\t'
        << pct(run.negative.recall) << '\t' << pct(run.negative.f1) << '\n';
  }
}

std::string report_summary_line(const EvalReport& report) {
  std::ostringstream out;
  out << report.method << "\tdim=" << report.dimension << "\tmacroF=" << pct(report.macro_f_mean)
      << "+-" << pct(report.macro_f_stddev) << "\tP=" << pct(report.macro_precision_mean)
      << "\tR=" << pct(report.macro_recall_mean) << "\ttime=" << report.wall_seconds << "s";
  return out.str();
}

}  // namespace convgraph
