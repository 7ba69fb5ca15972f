#include "convgraph/fusion.hpp"

#include <stdexcept>
#include <unordered_map>

namespace convgraph {

std::string to_string(FusionStrategy s) {
  switch (s) {
    case FusionStrategy::Early:
      return "early";
    case FusionStrategy::Late:
      return "late";
    case FusionStrategy::Hybrid:
      return "hybrid";
  }
  return "early";
}

FusionStrategy fusion_strategy_from_string(const std::string& text) {
  if (text == "early") return FusionStrategy::Early;
  if (text == "late") return FusionStrategy::Late;
  if (text == "hybrid") return FusionStrategy::Hybrid;
  throw std::invalid_argument("unknown fusion strategy '" + text +
                              "' (expected early, late or hybrid)");
}

Matrix fuse(const Matrix& a, const Matrix& b, std::span<const double> scores_a,
            std::span<const double> scores_b, FusionStrategy strategy) {
  const std::size_t n = a.rows();
  if (b.rows() != n) throw std::invalid_argument("fuse: row count mismatch");
  const bool needs_scores = strategy != FusionStrategy::Early;
  if (needs_scores && (scores_a.size() != n || scores_b.size() != n)) {
    throw std::invalid_argument("fuse: score vectors must cover every example");
  }

  std::size_t cols = 0;
  switch (strategy) {
    case FusionStrategy::Early:
      cols = a.cols() + b.cols();
      break;
    case FusionStrategy::Late:
      cols = 2;
      break;
    case FusionStrategy::Hybrid:
      cols = a.cols() + b.cols() + 2;
      break;
  }

  Matrix fused(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    if (strategy != FusionStrategy::Late) {
      for (std::size_t k = 0; k < a.cols(); ++k) fused(i, j++) = a(i, k);
      for (std::size_t k = 0; k < b.cols(); ++k) fused(i, j++) = b(i, k);
    }
    if (needs_scores) {
      fused(i, j++) = scores_a[i];
      fused(i, j++) = scores_b[i];
    }
  }
  return fused;
}

Matrix align_embedding_rows(const EmbeddingMatrix& m, const std::vector<std::string>& ids) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < m.ids.size(); ++i) index[m.ids[i]] = i;

  std::vector<std::string> missing;
  Matrix out(ids.size(), m.dimension);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto it = index.find(ids[i]);
    if (it == index.end()) {
      missing.push_back(ids[i]);
      continue;
    }
    for (std::size_t j = 0; j < m.dimension; ++j) out(i, j) = m.vectors(it->second, j);
  }
  if (!missing.empty()) {
    std::string message = "embedding '" + m.method + "' is missing ids:";
    for (const std::string& id : missing) message += " " + id;
    throw std::invalid_argument(message);
  }
  return out;
}

}  // namespace convgraph
