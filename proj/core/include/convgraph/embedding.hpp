#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "convgraph/graph.hpp"
#include "convgraph/matrix.hpp"
#include "convgraph/pvdbow.hpp"
#include "convgraph/wl.hpp"

namespace convgraph {

/// Whole-graph vectors, one row per corpus graph.
struct EmbeddingMatrix {
  std::vector<std::string> ids;
  Matrix vectors;  // ids.size() x dimension
  std::string method;
  std::size_t dimension = 0;
  std::uint64_t seed = 0;
  int epochs = 0;
  double final_loss = 0.0;

  std::optional<std::size_t> row_of(const std::string& id) const;
};

/// Tab-separated persistence: a header line with method/dimension/seed, then
/// one `graph_id \t v1 ... vd` row per graph. Doubles round-trip exactly.
void save_embedding(const EmbeddingMatrix& m, const std::filesystem::path& file);
EmbeddingMatrix load_embedding(const std::filesystem::path& file);

enum class EmbedMethod { G2v, Sg2vN, WdaSg2vN, Sg2vSb, WdaSg2vSb, Spectral };

std::string to_string(EmbedMethod m);
/// Throws with the list of valid names on an unknown method string.
EmbedMethod embed_method_from_string(const std::string& text);

struct EmbedConfig {
  TrainConfig train;
  AttributeScheme scheme;
  int wl_iterations = 2;
  bool include_channel_labels = false;
};

/// Runs one embedding method over a corpus: document construction plus
/// skip-gram training for the Graph2vec family, or per-graph spectra for
/// the spectral baseline (which ignores the scheme and training settings).
EmbeddingMatrix embed_corpus(const std::vector<ConvGraph>& graphs, EmbedMethod method,
                             const EmbedConfig& cfg);

}  // namespace convgraph
