#pragma once

#include <array>
#include <vector>

#include "convgraph/graph.hpp"

namespace convgraph {

/// HITS authority scores (unweighted, directed), power iteration with
/// 1-norm normalization. All-zero when the graph has no edges.
std::vector<double> hits_authority(const ConvGraph& g, int max_iterations = 200,
                                   double tolerance = 1e-12);

/// k-core index of every vertex on the undirected simple view.
std::vector<std::size_t> coreness(const ConvGraph& g);

/// Harmonic closeness on the undirected view: mean of 1/d(u,v) over other
/// vertices, unreachable pairs contributing 0. Zero for a single vertex.
std::vector<double> harmonic_closeness(const ConvGraph& g);

/// Weighted directed PageRank, damping 0.85, power iteration to 1e-10;
/// dangling mass teleports uniformly.
std::vector<double> pagerank(const ConvGraph& g, double damping = 0.85,
                             double tolerance = 1e-10);

/// (in + out) degree of u over (n - 1).
double degree_centrality(const ConvGraph& g, VertexId u);

/// Fraction of directed edges whose reverse edge exists; 0 without edges.
double reciprocity(const ConvGraph& g);

/// The ten graph best features, in order: mean authority (Full), mean
/// coreness (Full), mean coreness (Before), mean closeness (Before),
/// targeted-vertex closeness (Before), targeted-vertex closeness (After),
/// targeted-vertex PageRank (Full), targeted-vertex degree centrality
/// (Full), vertex count (Full), reciprocity (Full). Vertex-level measures
/// are evaluated at the targeted vertex; graph-level ones are averaged over
/// vertices. A null scope yields zeros for its entries.
std::array<double, 10> graph_best_features(const ConvGraph* full, const ConvGraph* before,
                                           const ConvGraph* after);

extern const std::array<const char*, 10> kGraphFeatureNames;

}  // namespace convgraph
