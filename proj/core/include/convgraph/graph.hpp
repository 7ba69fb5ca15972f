#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace convgraph {

using VertexId = std::uint32_t;

/// Distance value used for vertices unreachable from the targeted vertex.
inline constexpr std::uint32_t kUnreachable = 0xffffffffu;

/// Token used when rendering an unreachable distance as text.
inline constexpr const char* kUnreachableToken = "INF";

struct EdgeData {
  std::uint32_t weight = 1;  // co-occurrence count, >= 1
  int sign = +1;             // +1 or -1
};

struct AttributeRecord {
  std::string author;
  std::uint32_t distance = kUnreachable;  // geodesic hops to the targeted vertex
  bool target = false;
};

enum class EdgeMode { Out, In, All };

using EdgeKey = std::pair<VertexId, VertexId>;

/// Directed, weighted, signed graph of one conversation, with per-vertex
/// attributes and a designated targeted vertex. Immutable after construction;
/// the constructor validates all structural invariants.
class ConvGraph {
 public:
  ConvGraph(std::string id, std::vector<VertexId> vertices,
            std::map<VertexId, AttributeRecord> attributes,
            std::map<EdgeKey, EdgeData> edges, VertexId targeted_vertex);

  const std::string& id() const { return id_; }
  VertexId targeted_vertex() const { return targeted_; }

  /// Sorted ascending.
  const std::vector<VertexId>& vertex_ids() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_vertex(VertexId u) const;

  const AttributeRecord& attribute(VertexId u) const;
  const std::map<EdgeKey, EdgeData>& edges() const { return edges_; }
  const EdgeData* find_edge(VertexId from, VertexId to) const;

  /// Adjacent (vertex, edge) pairs in ascending vertex order. For All mode a
  /// neighbor connected in both directions appears once; the out-edge wins
  /// the representative slot unless the sign filter only matches the in-edge.
  std::vector<std::pair<VertexId, EdgeData>> neighbors(
      VertexId u, EdgeMode mode, std::optional<int> sign_filter = std::nullopt) const;

  /// Number of incident edges under the given mode/sign filter (All counts
  /// out- and in-edges separately, so a two-way pair contributes 2).
  std::size_t degree(VertexId u, EdgeMode mode,
                     std::optional<int> sign_filter = std::nullopt) const;

 private:
  std::string id_;
  std::vector<VertexId> vertices_;
  std::map<VertexId, AttributeRecord> attributes_;
  std::map<EdgeKey, EdgeData> edges_;
  VertexId targeted_;
  // Adjacency indexes, sorted by neighbor id.
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeData>>> out_adj_;
  std::map<VertexId, std::vector<std::pair<VertexId, EdgeData>>> in_adj_;

  void require_vertex(VertexId u) const;
};

/// Quartile number (1..4) per outgoing edge of u, from the rank of the edge
/// weight among all outgoing edges of u. Equal weights share the minimum
/// rank, so the breakdown is invariant under strictly increasing transforms
/// of the weights. Empty map when u has no outgoing edges.
std::map<EdgeKey, int> edge_quartiles(const ConvGraph& g, VertexId u);

/// BFS distance from the targeted vertex over the undirected view of the
/// graph. Unreachable vertices map to kUnreachable.
std::map<VertexId, std::uint32_t> geodesic_distances(const ConvGraph& g);

/// Renders a distance value for labels and serialization ("INF" when
/// unreachable).
std::string distance_to_string(std::uint32_t distance);
std::uint32_t distance_from_string(const std::string& text);

}  // namespace convgraph
