#include "convgraph/features_graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

namespace convgraph {

const std::array<const char*, 10> kGraphFeatureNames = {
    "authority_graph_full",   "coreness_graph_full",  "coreness_graph_before",
    "closeness_graph_before", "closeness_vertex_before", "closeness_vertex_after",
    "pagerank_vertex_full",   "degree_vertex_full",   "vertex_count_full",
    "reciprocity_full"};

namespace {

std::unordered_map<VertexId, std::size_t> vertex_index(const ConvGraph& g) {
  std::unordered_map<VertexId, std::size_t> index;
  const auto& ids = g.vertex_ids();
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
  return index;
}

std::vector<std::vector<std::size_t>> undirected_adjacency(const ConvGraph& g) {
  const auto index = vertex_index(g);
  std::vector<std::set<std::size_t>> sets(g.vertex_count());
  for (const auto& [key, data] : g.edges()) {
    const std::size_t a = index.at(key.first);
    const std::size_t b = index.at(key.second);
    sets[a].insert(b);
    sets[b].insert(a);
  }
  std::vector<std::vector<std::size_t>> adj(g.vertex_count());
  for (std::size_t i = 0; i < sets.size(); ++i) adj[i].assign(sets[i].begin(), sets[i].end());
  return adj;
}

double mean_of(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  double total = 0.0;
  for (double v : values) total += v;
  return total / static_cast<double>(values.size());
}

}  // namespace

std::vector<double> hits_authority(const ConvGraph& g, int max_iterations,
                                   double tolerance) {
  const std::size_t n = g.vertex_count();
  const auto index = vertex_index(g);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  arcs.reserve(g.edge_count());
  for (const auto& [key, data] : g.edges()) {
    arcs.emplace_back(index.at(key.first), index.at(key.second));
  }
  if (arcs.empty()) return std::vector<double>(n, 0.0);

  std::vector<double> authority(n, 1.0 / static_cast<double>(n));
  std::vector<double> hub(n, 1.0 / static_cast<double>(n));

  auto normalize = [](std::vector<double>& v) {
    double total = 0.0;
    for (double x : v) total += std::abs(x);
    if (total > 0.0) {
      for (double& x : v) x /= total;
    }
  };

  for (int it = 0; it < max_iterations; ++it) {
    std::vector<double> next_authority(n, 0.0), next_hub(n, 0.0);
    for (const auto& [from, to] : arcs) next_authority[to] += hub[from];
    normalize(next_authority);
    for (const auto& [from, to] : arcs) next_hub[from] += next_authority[to];
    normalize(next_hub);

    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      delta += std::abs(next_authority[i] - authority[i]) + std::abs(next_hub[i] - hub[i]);
    }
    authority = std::move(next_authority);
    hub = std::move(next_hub);
    if (delta < tolerance) break;
  }
  return authority;
}

std::vector<std::size_t> coreness(const ConvGraph& g) {
  const auto adj = undirected_adjacency(g);
  const std::size_t n = adj.size();
  std::vector<std::size_t> degree(n);
  for (std::size_t i = 0; i < n; ++i) degree[i] = adj[i].size();

  // Peel vertices in order of minimum remaining degree; the coreness of a
  // vertex is the running maximum of those minima at its removal.
  std::vector<std::size_t> core(n, 0);
  std::vector<bool> removed(n, false);
  std::size_t k = 0;
  for (std::size_t round = 0; round < n; ++round) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!removed[i] && (best == n || degree[i] < degree[best])) best = i;
    }
    if (best == n) break;
    k = std::max(k, degree[best]);
    core[best] = k;
    removed[best] = true;
    for (std::size_t j : adj[best]) {
      if (!removed[j] && degree[j] > 0) --degree[j];
    }
  }
  return core;
}

std::vector<double> harmonic_closeness(const ConvGraph& g) {
  const auto adj = undirected_adjacency(g);
  const std::size_t n = adj.size();
  std::vector<double> closeness(n, 0.0);
  if (n < 2) return closeness;

  std::vector<int> dist(n);
  std::vector<std::size_t> queue;
  for (std::size_t source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, source);
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    double total = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (v != source && dist[v] > 0) total += 1.0 / static_cast<double>(dist[v]);
    }
    closeness[source] = total / static_cast<double>(n - 1);
  }
  return closeness;
}

std::vector<double> pagerank(const ConvGraph& g, double damping, double tolerance) {
  const std::size_t n = g.vertex_count();
  const auto index = vertex_index(g);

  struct Arc {
    std::size_t from, to;
    double probability;
  };
  std::vector<Arc> arcs;
  std::vector<double> out_weight(n, 0.0);
  for (const auto& [key, data] : g.edges()) {
    out_weight[index.at(key.first)] += static_cast<double>(data.weight);
  }
  for (const auto& [key, data] : g.edges()) {
    const std::size_t from = index.at(key.first);
    arcs.push_back(
        {from, index.at(key.second), static_cast<double>(data.weight) / out_weight[from]});
  }

  std::vector<double> rank(n, 1.0 / static_cast<double>(n));
  for (int it = 0; it < 1000; ++it) {
    std::vector<double> next(n, 0.0);
    double dangling = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (out_weight[i] <= 0.0) dangling += rank[i];
    }
    const double base = (1.0 - damping) / static_cast<double>(n) +
                        damping * dangling / static_cast<double>(n);
    for (double& x : next) x = base;
    for (const Arc& arc : arcs) next[arc.to] += damping * rank[arc.from] * arc.probability;

    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta += std::abs(next[i] - rank[i]);
    rank = std::move(next);
    if (delta < tolerance) break;
  }
  return rank;
}

double degree_centrality(const ConvGraph& g, VertexId u) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return 0.0;
  return static_cast<double>(g.degree(u, EdgeMode::All)) / static_cast<double>(n - 1);
}

double reciprocity(const ConvGraph& g) {
  if (g.edge_count() == 0) return 0.0;
  std::size_t mutual = 0;
  for (const auto& [key, data] : g.edges()) {
    if (g.find_edge(key.second, key.first)) ++mutual;
  }
  return static_cast<double>(mutual) / static_cast<double>(g.edge_count());
}

namespace {

double vertex_value(const std::vector<double>& values, const ConvGraph& g, VertexId u) {
  const auto& ids = g.vertex_ids();
  const auto it = std::lower_bound(ids.begin(), ids.end(), u);
  return values[static_cast<std::size_t>(it - ids.begin())];
}

double mean_coreness(const ConvGraph& g) {
  const auto core = coreness(g);
  if (core.empty()) return 0.0;
  double total = 0.0;
  for (std::size_t c : core) total += static_cast<double>(c);
  return total / static_cast<double>(core.size());
}

}  // namespace

std::array<double, 10> graph_best_features(const ConvGraph* full, const ConvGraph* before,
                                           const ConvGraph* after) {
  std::array<double, 10> features{};
  if (full) {
    features[0] = mean_of(hits_authority(*full));
    features[1] = mean_coreness(*full);
    features[6] = vertex_value(pagerank(*full), *full, full->targeted_vertex());
    features[7] = degree_centrality(*full, full->targeted_vertex());
    features[8] = static_cast<double>(full->vertex_count());
    features[9] = reciprocity(*full);
  }
  if (before) {
    features[2] = mean_coreness(*before);
    const auto closeness = harmonic_closeness(*before);
    features[3] = mean_of(closeness);
    features[4] = vertex_value(closeness, *before, before->targeted_vertex());
  }
  if (after) {
    features[5] = vertex_value(harmonic_closeness(*after), *after, after->targeted_vertex());
  }
  return features;
}

}  // namespace convgraph
