#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "convgraph/matrix.hpp"

namespace convgraph {

/// Per-feature training-set standardization; constant features scale to 0.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale;  // 1/std, 0 for constant features

  static Standardizer fit(const Matrix& x, std::span<const std::size_t> rows);
  std::vector<double> transform(std::span<const double> x) const;
};

struct LinearHyperparams {
  double C = 1.0;
  int epochs = 1000;  // maximum optimization passes
  std::uint64_t seed = 0;
  double tolerance = 1e-12;
};

/// Margin classifier minimizing mean hinge loss plus an L2 penalty of
/// 1/(2Cn) on the augmented weight vector. Solved exactly by dual
/// coordinate descent, so identical inputs give identical models to
/// machine precision.
struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  Standardizer standardizer;

  double decision_score(std::span<const double> x) const;
  int predict(std::span<const double> x) const { return decision_score(x) >= 0.0 ? +1 : -1; }
};

/// y entries must be +1 or -1 with both classes present.
LinearModel train_linear(const Matrix& x, const std::vector<int>& y,
                         const LinearHyperparams& hp);

/// Restriction of train_linear to a row subset (used by cross-validation).
LinearModel train_linear_rows(const Matrix& x, const std::vector<int>& y,
                              std::span<const std::size_t> rows,
                              const LinearHyperparams& hp);

}  // namespace convgraph
