#include "convgraph/linear.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "convgraph/rng.hpp"

namespace convgraph {

Standardizer Standardizer::fit(const Matrix& x, std::span<const std::size_t> rows) {
  const std::size_t d = x.cols();
  Standardizer s;
  s.mean.assign(d, 0.0);
  s.scale.assign(d, 0.0);
  if (rows.empty()) return s;

  for (std::size_t r : rows) {
    for (std::size_t j = 0; j < d; ++j) s.mean[j] += x(r, j);
  }
  for (double& m : s.mean) m /= static_cast<double>(rows.size());

  std::vector<double> var(d, 0.0);
  for (std::size_t r : rows) {
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = x(r, j) - s.mean[j];
      var[j] += diff * diff;
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    const double sd = std::sqrt(var[j] / static_cast<double>(rows.size()));
    s.scale[j] = sd > 1e-12 ? 1.0 / sd : 0.0;
  }
  return s;
}

std::vector<double> Standardizer::transform(std::span<const double> x) const {
  std::vector<double> out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) out[j] = (x[j] - mean[j]) * scale[j];
  return out;
}

double LinearModel::decision_score(std::span<const double> x) const {
  const std::vector<double> z = standardizer.transform(x);
  double score = bias;
  for (std::size_t j = 0; j < z.size(); ++j) score += weights[j] * z[j];
  return score;
}

LinearModel train_linear_rows(const Matrix& x, const std::vector<int>& y,
                              std::span<const std::size_t> rows,
                              const LinearHyperparams& hp) {
  if (rows.empty()) throw std::invalid_argument("train_linear: empty training set");
  if (hp.C <= 0.0) throw std::invalid_argument("train_linear: C must be > 0");
  bool has_pos = false, has_neg = false;
  for (std::size_t r : rows) {
    if (y[r] > 0) has_pos = true;
    if (y[r] < 0) has_neg = true;
    if (y[r] != 1 && y[r] != -1) {
      throw std::invalid_argument("train_linear: labels must be +1 or -1");
    }
  }
  if (!has_pos || !has_neg) {
    throw std::invalid_argument("train_linear: training set contains a single class");
  }

  const std::size_t n = rows.size();
  const std::size_t d = x.cols();
  Standardizer standardizer = Standardizer::fit(x, rows);

  // Standardized rows with an appended constant coordinate for the bias.
  Matrix z(n, d + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = standardizer.transform(x.row(rows[i]));
    for (std::size_t j = 0; j < d; ++j) z(i, j) = row[j];
    z(i, d) = 1.0;
  }

  // Dual coordinate descent on:  min 1/2 ||w||^2 + C sum hinge_i,
  // which is the stated objective scaled by C*n. Box 0 <= alpha_i <= C,
  // w = sum alpha_i y_i z_i.
  std::vector<double> alpha(n, 0.0);
  std::vector<double> w(d + 1, 0.0);
  std::vector<double> qd(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double q = 0.0;
    for (std::size_t j = 0; j <= d; ++j) q += z(i, j) * z(i, j);
    qd[i] = q;
  }

  Rng rng(hp.seed);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;

  for (int pass = 0; pass < hp.epochs; ++pass) {
    rng.shuffle(order);
    double max_violation = 0.0;
    for (std::size_t i : order) {
      if (qd[i] <= 0.0) continue;
      const double yi = static_cast<double>(y[rows[i]]);
      double wz = 0.0;
      for (std::size_t j = 0; j <= d; ++j) wz += w[j] * z(i, j);
      const double gradient = yi * wz - 1.0;

      double projected = gradient;
      if (alpha[i] <= 0.0) projected = std::min(gradient, 0.0);
      if (alpha[i] >= hp.C) projected = std::max(gradient, 0.0);
      max_violation = std::max(max_violation, std::abs(projected));
      if (projected == 0.0) continue;

      const double updated = std::clamp(alpha[i] - gradient / qd[i], 0.0, hp.C);
      const double delta = (updated - alpha[i]) * yi;
      alpha[i] = updated;
      for (std::size_t j = 0; j <= d; ++j) w[j] += delta * z(i, j);
    }
    if (max_violation < hp.tolerance) break;
  }

  LinearModel model;
  model.weights.assign(w.begin(), w.begin() + static_cast<long>(d));
  model.bias = w[d];
  model.standardizer = std::move(standardizer);
  return model;
}

LinearModel train_linear(const Matrix& x, const std::vector<int>& y,
                         const LinearHyperparams& hp) {
  if (x.rows() != y.size()) {
    throw std::invalid_argument("train_linear: feature/label row count mismatch");
  }
  std::vector<std::size_t> rows(x.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return train_linear_rows(x, y, rows, hp);
}

}  // namespace convgraph
