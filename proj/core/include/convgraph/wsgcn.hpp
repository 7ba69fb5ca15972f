#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "convgraph/embedding.hpp"
#include "convgraph/graph.hpp"
#include "convgraph/matrix.hpp"

namespace convgraph {

/// Connection pattern of the master node(s) added to each graph: one master
/// with positive edges to and from every vertex, one with negative edges,
/// or one of each.
enum class MasterScheme { PlusOnly, MinusOnly, PlusMinus };

std::string to_string(MasterScheme scheme);
MasterScheme master_scheme_from_string(const std::string& text);

struct AugmentedGraph {
  ConvGraph graph;
  std::vector<VertexId> masters;  // ascending; never the targeted vertex
};

/// Adds the master node(s) with weight-1 edges to and from every original
/// vertex. Masters carry a reserved author id, an unreachable distance and
/// target = 0.
AugmentedGraph attach_master_nodes(const ConvGraph& g, MasterScheme scheme);

/// In-edge coefficients of u: weight(v,u) divided by the total ingoing
/// weight of the same sign channel, so each channel's coefficients sum to 1.
std::map<VertexId, double> normalized_in_weights(const ConvGraph& g, VertexId u);

/// Input feature layout: target flag, 1/(1+distance), unreachable flag, and
/// an 8-bucket author hash one-hot.
inline constexpr std::size_t kWsgcnAuthorBuckets = 8;
inline constexpr std::size_t kWsgcnInputDim = 3 + kWsgcnAuthorBuckets;

std::vector<double> wsgcn_input_features(const ConvGraph& g, VertexId u);

/// Two-layer two-channel encoder. Layer weights and the edge-sign predictor
/// are trained; the readout projecting the concatenated master
/// representations to the output dimension is a fixed seeded projection.
struct WsgcnModel {
  MasterScheme scheme = MasterScheme::PlusMinus;
  std::size_t input_dim = kWsgcnInputDim;
  std::size_t hidden = 64;
  std::size_t output = 128;
  std::uint64_t seed = 0;

  Matrix w1_bal, w1_unb;  // hidden x 2*input
  std::vector<double> b1_bal, b1_unb;
  Matrix w2_bal, w2_unb;  // hidden x 3*hidden
  std::vector<double> b2_bal, b2_unb;
  std::vector<double> theta;  // sign predictor over [r_u; r_v], 4*hidden
  double theta_bias = 0.0;
  Matrix readout;  // output x (2*hidden*n_masters)

  std::size_t master_count() const { return scheme == MasterScheme::PlusMinus ? 2 : 1; }
  static WsgcnModel initialize(MasterScheme scheme, std::size_t hidden, std::size_t output,
                               std::uint64_t seed);
};

struct WsgcnForward {
  std::vector<VertexId> vertex_order;       // ascending augmented vertex ids
  Matrix vertex_representations;            // n x 2*hidden ([balanced; unbalanced])
  std::vector<double> graph_representation; // output-dim readout of the masters
};

WsgcnForward wsgcn_forward(const AugmentedGraph& aug, const WsgcnModel& model);

struct WsgcnGradients {
  Matrix w1_bal, w1_unb;
  std::vector<double> b1_bal, b1_unb;
  Matrix w2_bal, w2_unb;
  std::vector<double> b2_bal, b2_unb;
  std::vector<double> theta;
  double theta_bias = 0.0;
};

/// Mean binary cross-entropy of the edge-sign predictor over the original
/// (non-master) edges, with analytic gradients for every trained tensor.
double wsgcn_sign_loss(const AugmentedGraph& aug, const WsgcnModel& model,
                       WsgcnGradients* grads);

struct WsgcnTrainConfig {
  MasterScheme scheme = MasterScheme::PlusMinus;
  std::size_t hidden = 64;
  std::size_t output = 128;
  int epochs = 30;
  double learning_rate = 0.05;
  std::uint64_t seed = 7;
  // false runs the unweighted ablation: every weight forced to 1 and
  // directions symmetrized before training.
  bool use_weights_and_directions = true;
};

struct WsgcnTrainResult {
  WsgcnModel model;
  EmbeddingMatrix embeddings;
  std::vector<double> epoch_losses;
};

/// Corpus-wide training by edge-sign prediction; after training, a forward
/// pass per graph yields the whole-graph embedding matrix.
WsgcnTrainResult train_wsgcn(const std::vector<ConvGraph>& graphs,
                             const WsgcnTrainConfig& cfg);

/// Forces every edge weight to 1 and adds missing reverse edges; used by the
/// unweighted/undirected ablation.
ConvGraph unweight_and_symmetrize(const ConvGraph& g);

void save_wsgcn_model(const WsgcnModel& model, const std::filesystem::path& file);
WsgcnModel load_wsgcn_model(const std::filesystem::path& file);

}  // namespace convgraph
