#include "convgraph/extract.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace convgraph {

std::string to_string(Scope scope) {
  switch (scope) {
    case Scope::Full:
      return "full";
    case Scope::Before:
      return "before";
    case Scope::After:
      return "after";
  }
  return "full";
}

Scope scope_from_string(const std::string& text) {
  if (text == "full") return Scope::Full;
  if (text == "before") return Scope::Before;
  if (text == "after") return Scope::After;
  throw std::invalid_argument("unknown scope '" + text + "' (expected full, before or after)");
}

void ExtractionConfig::validate() const {
  if (window_size < 2) throw std::invalid_argument("window_size must be >= 2");
  if (context_size < 1) throw std::invalid_argument("context_size must be >= 1");
}

ConvGraph extract_graph(const Conversation& conv, const ExtractionConfig& cfg,
                        const SentimentScorer& scorer) {
  cfg.validate();
  if (conv.messages.empty() || conv.target_index >= conv.messages.size()) {
    throw std::invalid_argument("conversation '" + conv.id + "' has no valid target message");
  }

  // Context period: cfg.context_size messages on each side of the target,
  // restricted to the requested scope (the target message is always kept).
  const std::size_t target = conv.target_index;
  std::size_t begin = target >= cfg.context_size ? target - cfg.context_size : 0;
  std::size_t end = std::min(conv.messages.size(), target + cfg.context_size + 1);
  if (cfg.scope == Scope::Before) end = target + 1;
  if (cfg.scope == Scope::After) begin = target;

  std::vector<const Message*> context;
  context.reserve(end - begin);
  for (std::size_t i = begin; i < end; ++i) context.push_back(&conv.messages[i]);

  // Vertex ids by first appearance in the context period.
  std::unordered_map<std::string, VertexId> author_to_id;
  std::vector<std::string> authors;
  auto vertex_of = [&](const std::string& author) {
    auto it = author_to_id.find(author);
    if (it != author_to_id.end()) return it->second;
    const VertexId id = static_cast<VertexId>(authors.size());
    author_to_id.emplace(author, id);
    authors.push_back(author);
    return id;
  };
  for (const Message* m : context) vertex_of(m->author);

  // Per-message polarity is needed once per message, not once per pair.
  std::vector<double> polarity(context.size(), 0.0);
  if (cfg.signed_edges) {
    for (std::size_t i = 0; i < context.size(); ++i) polarity[i] = scorer(context[i]->text);
  }

  struct Accumulator {
    std::uint64_t weight = 0;
    double evidence = 0.0;
  };
  std::map<EdgeKey, Accumulator> acc;

  const std::size_t n = context.size();
  for (std::size_t start = 0; start < n; ++start) {
    const std::size_t stop = std::min(n, start + cfg.window_size);
    for (std::size_t j = start + 1; j < stop; ++j) {
      const VertexId from = vertex_of(context[j]->author);
      for (std::size_t i = start; i < j; ++i) {
        if (context[i]->author == context[j]->author) continue;
        const VertexId to = vertex_of(context[i]->author);
        Accumulator& a = acc[{from, to}];
        a.weight += 1;
        a.evidence += polarity[j];
      }
    }
  }

  std::map<EdgeKey, EdgeData> edges;
  for (const auto& [key, a] : acc) {
    EdgeData data;
    data.weight = static_cast<std::uint32_t>(a.weight);
    data.sign = (!cfg.signed_edges || a.evidence >= 0.0) ? +1 : -1;
    edges.emplace(key, data);
  }

  const VertexId targeted = author_to_id.at(conv.messages[target].author);

  // BFS over the undirected view for the distance attribute.
  std::vector<std::vector<VertexId>> undirected(authors.size());
  for (const auto& [key, data] : edges) {
    undirected[key.first].push_back(key.second);
    undirected[key.second].push_back(key.first);
  }
  std::vector<std::uint32_t> dist(authors.size(), kUnreachable);
  std::vector<VertexId> queue{targeted};
  dist[targeted] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId u = queue[head];
    for (VertexId v : undirected[u]) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }

  std::vector<VertexId> vertices;
  std::map<VertexId, AttributeRecord> attributes;
  for (VertexId u = 0; u < authors.size(); ++u) {
    vertices.push_back(u);
    AttributeRecord rec;
    rec.author = authors[u];
    rec.target = (u == targeted);
    rec.distance = dist[u];
    attributes[u] = std::move(rec);
  }
  return ConvGraph(conv.id, std::move(vertices), std::move(attributes), std::move(edges),
                   targeted);
}

}  // namespace convgraph
