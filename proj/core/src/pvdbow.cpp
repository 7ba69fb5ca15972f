#include "convgraph/pvdbow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "convgraph/rng.hpp"

namespace convgraph {

void TrainConfig::validate() const {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (negatives < 1) throw std::invalid_argument("negatives must be >= 1");
  if (learning_rate <= 0.0) throw std::invalid_argument("learning_rate must be > 0");
}

namespace {

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

PvdbowResult train_pvdbow(const std::vector<GraphDocument>& docs, const TrainConfig& cfg) {
  cfg.validate();
  if (docs.empty()) throw std::invalid_argument("pvdbow: empty corpus");
  for (const GraphDocument& doc : docs) {
    if (doc.labels.empty()) {
      throw std::invalid_argument("pvdbow: document of graph '" + doc.graph_id +
                                  "' has no labels");
    }
  }

  // Dense vocabulary over the label ids present in the corpus.
  std::unordered_map<std::uint32_t, std::size_t> vocab;
  std::vector<std::uint64_t> counts;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // (doc, vocab index)
  for (std::size_t di = 0; di < docs.size(); ++di) {
    for (std::uint32_t label : docs[di].labels) {
      auto [it, fresh] = vocab.emplace(label, vocab.size());
      if (fresh) counts.push_back(0);
      counts[it->second] += 1;
      pairs.emplace_back(static_cast<std::uint32_t>(di),
                         static_cast<std::uint32_t>(it->second));
    }
  }
  const std::size_t v = counts.size();
  const std::size_t d = cfg.dimension;

  // Negative-sampling distribution: unigram^0.75, sampled by binary search
  // on the cumulative table.
  std::vector<double> cumulative(v);
  double total = 0.0;
  for (std::size_t i = 0; i < v; ++i) {
    total += std::pow(static_cast<double>(counts[i]), 0.75);
    cumulative[i] = total;
  }

  Rng rng(cfg.seed);
  Matrix graph_vecs(docs.size(), d);
  Matrix label_vecs(v, d);
  const double scale = 0.5 / static_cast<double>(d);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) graph_vecs(i, j) = rng.uniform_real(-scale, scale);
  }
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < d; ++j) label_vecs(i, j) = rng.uniform_real(-scale, scale);
  }

  auto sample_negative = [&]() {
    const double u = rng.uniform_real() * total;
    return static_cast<std::size_t>(
        std::lower_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
  };

  const std::uint64_t total_updates =
      static_cast<std::uint64_t>(cfg.epochs) * pairs.size();
  std::uint64_t update = 0;

  PvdbowResult result;
  result.epoch_losses.reserve(cfg.epochs);
  std::vector<double> grad(d);

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    rng.shuffle(pairs);
    double epoch_loss = 0.0;

    for (const auto& [di, positive] : pairs) {
      const double progress = static_cast<double>(update) / static_cast<double>(total_updates);
      const double lr = std::max(cfg.min_learning_rate,
                                 cfg.learning_rate * (1.0 - progress));
      ++update;

      double* g = graph_vecs.data() + static_cast<std::size_t>(di) * d;
      std::fill(grad.begin(), grad.end(), 0.0);
      double pair_loss = 0.0;

      auto apply = [&](std::size_t label, double target) {
        double* w = label_vecs.data() + label * d;
        double dot = 0.0;
        for (std::size_t j = 0; j < d; ++j) dot += g[j] * w[j];
        const double pred = sigmoid(dot);
        pair_loss -= target > 0.5 ? std::log(std::max(pred, 1e-12))
                                  : std::log(std::max(1.0 - pred, 1e-12));
        const double delta = (target - pred) * lr;
        for (std::size_t j = 0; j < d; ++j) {
          grad[j] += delta * w[j];
          w[j] += delta * g[j];
        }
      };

      apply(positive, 1.0);
      for (int k = 0; k < cfg.negatives; ++k) {
        const std::size_t negative = sample_negative();
        if (negative == positive) continue;  // drawing the target downweights nothing
        apply(negative, 0.0);
      }
      for (std::size_t j = 0; j < d; ++j) g[j] += grad[j];
      epoch_loss += pair_loss;
    }
    result.epoch_losses.push_back(epoch_loss / static_cast<double>(pairs.size()));
  }

  result.graph_vectors = std::move(graph_vecs);
  return result;
}

}  // namespace convgraph
