#include "convgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace convgraph {

namespace {

const char* kReservedLabelChars = "|;,";

bool has_reserved_chars(const std::string& s) {
  return s.find_first_of(kReservedLabelChars) != std::string::npos;
}

}  // namespace

ConvGraph::ConvGraph(std::string id, std::vector<VertexId> vertices,
                     std::map<VertexId, AttributeRecord> attributes,
                     std::map<EdgeKey, EdgeData> edges, VertexId targeted_vertex)
    : id_(std::move(id)),
      vertices_(std::move(vertices)),
      attributes_(std::move(attributes)),
      edges_(std::move(edges)),
      targeted_(targeted_vertex) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());

  if (!has_vertex(targeted_)) {
    throw std::invalid_argument("graph '" + id_ + "': targeted vertex " +
                                std::to_string(targeted_) + " not in vertex set");
  }
  for (VertexId u : vertices_) {
    auto it = attributes_.find(u);
    if (it == attributes_.end()) {
      throw std::invalid_argument("graph '" + id_ + "': vertex " + std::to_string(u) +
                                  " has no attribute record");
    }
    const AttributeRecord& rec = it->second;
    if (has_reserved_chars(rec.author)) {
      throw std::invalid_argument("graph '" + id_ + "': author id '" + rec.author +
                                  "' contains a reserved label character (| ; ,)");
    }
    const bool is_target = (u == targeted_);
    if (rec.target != is_target) {
      throw std::invalid_argument("graph '" + id_ + "': target flag of vertex " +
                                  std::to_string(u) + " inconsistent with targeted vertex");
    }
    if ((rec.distance == 0) != is_target) {
      throw std::invalid_argument("graph '" + id_ + "': distance 0 must coincide with the "
                                  "targeted vertex (vertex " + std::to_string(u) + ")");
    }
  }
  if (attributes_.size() != vertices_.size()) {
    throw std::invalid_argument("graph '" + id_ + "': attribute record for unknown vertex");
  }

  for (const auto& [key, data] : edges_) {
    const auto [from, to] = key;
    if (from == to) {
      throw std::invalid_argument("graph '" + id_ + "': self-loop on vertex " +
                                  std::to_string(from));
    }
    if (!has_vertex(from) || !has_vertex(to)) {
      throw std::invalid_argument("graph '" + id_ + "': edge endpoint not in vertex set (" +
                                  std::to_string(from) + " -> " + std::to_string(to) + ")");
    }
    if (data.weight < 1) {
      throw std::invalid_argument("graph '" + id_ + "': edge weight must be >= 1");
    }
    if (data.sign != 1 && data.sign != -1) {
      throw std::invalid_argument("graph '" + id_ + "': edge sign must be +1 or -1");
    }
    out_adj_[from].emplace_back(to, data);
    in_adj_[to].emplace_back(from, data);
  }
  for (auto& [u, adj] : out_adj_) {
    std::sort(adj.begin(), adj.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  for (auto& [u, adj] : in_adj_) {
    std::sort(adj.begin(), adj.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
}

bool ConvGraph::has_vertex(VertexId u) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), u);
}

void ConvGraph::require_vertex(VertexId u) const {
  if (!has_vertex(u)) {
    throw std::invalid_argument("vertex not in graph: " + std::to_string(u));
  }
}

const AttributeRecord& ConvGraph::attribute(VertexId u) const {
  require_vertex(u);
  return attributes_.at(u);
}

const EdgeData* ConvGraph::find_edge(VertexId from, VertexId to) const {
  auto it = edges_.find({from, to});
  return it == edges_.end() ? nullptr : &it->second;
}

std::vector<std::pair<VertexId, EdgeData>> ConvGraph::neighbors(
    VertexId u, EdgeMode mode, std::optional<int> sign_filter) const {
  require_vertex(u);
  auto matches = [&](const EdgeData& d) { return !sign_filter || d.sign == *sign_filter; };

  auto filtered = [&](const std::map<VertexId, std::vector<std::pair<VertexId, EdgeData>>>& adj) {
    std::vector<std::pair<VertexId, EdgeData>> out;
    auto it = adj.find(u);
    if (it == adj.end()) return out;
    for (const auto& [v, d] : it->second) {
      if (matches(d)) out.emplace_back(v, d);
    }
    return out;
  };

  if (mode == EdgeMode::Out) return filtered(out_adj_);
  if (mode == EdgeMode::In) return filtered(in_adj_);

  // All: one entry per adjacent vertex; representative edge is the out-edge
  // when it passes the filter, otherwise the in-edge.
  std::vector<std::pair<VertexId, EdgeData>> out;
  auto oit = out_adj_.find(u);
  auto iit = in_adj_.find(u);
  std::size_t i = 0, j = 0;
  const auto* ov = oit != out_adj_.end() ? &oit->second : nullptr;
  const auto* iv = iit != in_adj_.end() ? &iit->second : nullptr;
  const std::size_t on = ov ? ov->size() : 0, in = iv ? iv->size() : 0;
  while (i < on || j < in) {
    VertexId ou = i < on ? (*ov)[i].first : kUnreachable;
    VertexId inu = j < in ? (*iv)[j].first : kUnreachable;
    if (ou < inu) {
      if (matches((*ov)[i].second)) out.emplace_back((*ov)[i]);
      ++i;
    } else if (inu < ou) {
      if (matches((*iv)[j].second)) out.emplace_back((*iv)[j]);
      ++j;
    } else {
      if (matches((*ov)[i].second)) {
        out.emplace_back((*ov)[i]);
      } else if (matches((*iv)[j].second)) {
        out.emplace_back((*iv)[j]);
      }
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t ConvGraph::degree(VertexId u, EdgeMode mode,
                              std::optional<int> sign_filter) const {
  require_vertex(u);
  auto count = [&](const std::map<VertexId, std::vector<std::pair<VertexId, EdgeData>>>& adj) {
    auto it = adj.find(u);
    if (it == adj.end()) return std::size_t{0};
    if (!sign_filter) return it->second.size();
    std::size_t n = 0;
    for (const auto& [v, d] : it->second) {
      if (d.sign == *sign_filter) ++n;
    }
    return n;
  };
  switch (mode) {
    case EdgeMode::Out:
      return count(out_adj_);
    case EdgeMode::In:
      return count(in_adj_);
    case EdgeMode::All:
      return count(out_adj_) + count(in_adj_);
  }
  return 0;
}

std::map<EdgeKey, int> edge_quartiles(const ConvGraph& g, VertexId u) {
  std::map<EdgeKey, int> result;
  auto out = g.neighbors(u, EdgeMode::Out);
  const std::size_t n = out.size();
  if (n == 0) return result;

  std::vector<std::uint32_t> weights;
  weights.reserve(n);
  for (const auto& [v, d] : out) weights.push_back(d.weight);
  std::sort(weights.begin(), weights.end());

  for (const auto& [v, d] : out) {
    // Rank = 1 + number of strictly smaller weights, so ties share the
    // minimum rank.
    const std::size_t rank =
        1 + static_cast<std::size_t>(
                std::lower_bound(weights.begin(), weights.end(), d.weight) - weights.begin());
    const int q = static_cast<int>(std::min<std::size_t>(4, 1 + (4 * (rank - 1)) / n));
    result[{u, v}] = q;
  }
  return result;
}

std::map<VertexId, std::uint32_t> geodesic_distances(const ConvGraph& g) {
  std::map<VertexId, std::uint32_t> dist;
  for (VertexId u : g.vertex_ids()) dist[u] = kUnreachable;
  std::deque<VertexId> queue;
  dist[g.targeted_vertex()] = 0;
  queue.push_back(g.targeted_vertex());
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (const auto& [v, d] : g.neighbors(u, EdgeMode::All)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::string distance_to_string(std::uint32_t distance) {
  return distance == kUnreachable ? kUnreachableToken : std::to_string(distance);
}

std::uint32_t distance_from_string(const std::string& text) {
  if (text == kUnreachableToken) return kUnreachable;
  const long long v = std::stoll(text);
  if (v < 0 || v >= static_cast<long long>(kUnreachable)) {
    throw std::invalid_argument("invalid distance value: " + text);
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace convgraph
