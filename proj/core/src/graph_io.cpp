#include "convgraph/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace convgraph {

namespace {

using ordered_json = nlohmann::ordered_json;

int sign_from_token(const std::string& token, const std::string& file) {
  if (token == "+") return +1;
  if (token == "-") return -1;
  throw std::runtime_error(file + ": invalid edge sign '" + token + "' (expected \"+\" or \"-\")");
}

}  // namespace

std::string graph_to_json(const ConvGraph& g) {
  ordered_json doc;
  doc["id"] = g.id();
  doc["targeted_vertex"] = g.targeted_vertex();

  ordered_json vertices = ordered_json::array();
  for (VertexId u : g.vertex_ids()) {
    const AttributeRecord& rec = g.attribute(u);
    ordered_json v;
    v["id"] = u;
    v["author"] = rec.author;
    if (rec.distance == kUnreachable) {
      v["distance"] = kUnreachableToken;
    } else {
      v["distance"] = rec.distance;
    }
    v["target"] = rec.target ? 1 : 0;
    vertices.push_back(std::move(v));
  }
  doc["vertices"] = std::move(vertices);

  ordered_json edges = ordered_json::array();
  for (const auto& [key, data] : g.edges()) {
    ordered_json e;
    e["from"] = key.first;
    e["to"] = key.second;
    e["weight"] = data.weight;
    e["sign"] = data.sign > 0 ? "+" : "-";
    edges.push_back(std::move(e));
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

ConvGraph graph_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string("graph parse error: ") + e.what());
  }

  const std::string id = doc.at("id").get<std::string>();
  const VertexId targeted = doc.at("targeted_vertex").get<VertexId>();

  std::vector<VertexId> vertices;
  std::map<VertexId, AttributeRecord> attributes;
  for (const auto& v : doc.at("vertices")) {
    const VertexId u = v.at("id").get<VertexId>();
    AttributeRecord rec;
    rec.author = v.at("author").get<std::string>();
    const auto& dist = v.at("distance");
    rec.distance = dist.is_string() ? distance_from_string(dist.get<std::string>())
                                    : dist.get<std::uint32_t>();
    rec.target = v.at("target").get<int>() != 0;
    vertices.push_back(u);
    attributes[u] = std::move(rec);
  }

  std::map<EdgeKey, EdgeData> edges;
  for (const auto& e : doc.at("edges")) {
    const VertexId from = e.at("from").get<VertexId>();
    const VertexId to = e.at("to").get<VertexId>();
    EdgeData data;
    data.weight = e.at("weight").get<std::uint32_t>();
    data.sign = sign_from_token(e.at("sign").get<std::string>(), id);
    if (!edges.emplace(EdgeKey{from, to}, data).second) {
      throw std::runtime_error("graph '" + id + "': duplicate edge " + std::to_string(from) +
                               " -> " + std::to_string(to));
    }
  }

  return ConvGraph(id, std::move(vertices), std::move(attributes), std::move(edges), targeted);
}

void save_graph(const ConvGraph& g, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
  out << graph_to_json(g);
}

ConvGraph load_graph(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file: " + file.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return graph_from_json(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
}

std::vector<ConvGraph> load_graph_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<ConvGraph> graphs;
  graphs.reserve(files.size());
  for (const auto& f : files) graphs.push_back(load_graph(f));
  return graphs;
}

}  // namespace convgraph
