#pragma once

#include <cstdint>
#include <vector>

#include "convgraph/matrix.hpp"
#include "convgraph/wl.hpp"

namespace convgraph {

struct TrainConfig {
  std::size_t dimension = 128;
  int epochs = 50;
  double learning_rate = 0.025;      // linearly decayed to min_learning_rate
  double min_learning_rate = 1e-4;
  int negatives = 5;                 // negative samples per positive
  std::uint64_t seed = 1;

  void validate() const;
};

struct PvdbowResult {
  Matrix graph_vectors;              // one row per input document
  std::vector<double> epoch_losses;  // mean negative-sampling loss per epoch
};

/// PV-DBOW with negative sampling: each graph vector is trained to predict
/// the labels of its document; negatives are drawn from the unigram
/// distribution raised to 0.75. Deterministic for a fixed seed (seeded
/// shuffles and sampler, fixed iteration order).
PvdbowResult train_pvdbow(const std::vector<GraphDocument>& docs, const TrainConfig& cfg);

}  // namespace convgraph
