#include "convgraph/wl.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace convgraph {

std::string to_string(WlVariant v) {
  switch (v) {
    case WlVariant::Plain:
      return "plain";
    case WlVariant::SignedN:
      return "signed_n";
    case WlVariant::WdaN:
      return "wda_n";
    case WlVariant::SignedSb:
      return "signed_sb";
    case WlVariant::WdaSb:
      return "wda_sb";
  }
  return "plain";
}

WlVariant wl_variant_from_string(const std::string& text) {
  if (text == "plain") return WlVariant::Plain;
  if (text == "signed_n") return WlVariant::SignedN;
  if (text == "wda_n") return WlVariant::WdaN;
  if (text == "signed_sb") return WlVariant::SignedSb;
  if (text == "wda_sb") return WlVariant::WdaSb;
  throw std::invalid_argument("unknown WL variant '" + text + "'");
}

AttributeScheme AttributeScheme::parse(const std::string& text) {
  AttributeScheme scheme;
  scheme.parts.clear();
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (part == "degree") {
      scheme.parts.push_back(AttributeBase::Degree);
    } else if (part == "author") {
      scheme.parts.push_back(AttributeBase::Author);
    } else if (part == "distance") {
      scheme.parts.push_back(AttributeBase::Distance);
    } else if (part == "target") {
      scheme.parts.push_back(AttributeBase::Target);
    } else {
      throw std::invalid_argument("unknown attribute '" + part +
                                  "' (expected degree, author, distance or target)");
    }
  }
  scheme.validate();
  return scheme;
}

std::string AttributeScheme::to_string() const {
  std::string out;
  for (AttributeBase base : parts) {
    if (!out.empty()) out.push_back('+');
    switch (base) {
      case AttributeBase::Degree:
        out += "degree";
        break;
      case AttributeBase::Author:
        out += "author";
        break;
      case AttributeBase::Distance:
        out += "distance";
        break;
      case AttributeBase::Target:
        out += "target";
        break;
    }
  }
  return out;
}

void AttributeScheme::validate() const {
  if (parts.empty()) throw std::invalid_argument("attribute scheme must not be empty");
  std::set<AttributeBase> seen(parts.begin(), parts.end());
  if (seen.size() != parts.size()) {
    throw std::invalid_argument("attribute scheme must not repeat attributes");
  }
}

void WlConfig::validate() const {
  scheme.validate();
  if (iterations < 1) throw std::invalid_argument("at least one iteration required");
}

void LabelDictionary::intern_round(const std::vector<std::string>& round) {
  std::vector<std::string> fresh;
  fresh.reserve(round.size());
  for (const std::string& s : round) {
    if (!ids_.count(s)) fresh.push_back(s);
  }
  std::sort(fresh.begin(), fresh.end());
  fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
  for (std::string& s : fresh) {
    const auto id = static_cast<std::uint32_t>(strings_.size());
    ids_.emplace(s, id);
    strings_.push_back(std::move(s));
  }
}

std::uint32_t LabelDictionary::id(const std::string& label) const {
  auto it = ids_.find(label);
  if (it == ids_.end()) throw std::out_of_range("label not in dictionary: " + label);
  return it->second;
}

namespace {

struct VariantTraits {
  bool dual = false;           // two-channel structural-balance update
  bool out_neighborhood = false;
  bool sign_prefix = false;    // N variants only
  bool real_quartiles = false; // false -> constant prefix
};

VariantTraits traits_of(WlVariant v) {
  switch (v) {
    case WlVariant::Plain:
      return {false, false, false, false};
    case WlVariant::SignedN:
      return {false, true, true, false};
    case WlVariant::WdaN:
      return {false, true, true, true};
    case WlVariant::SignedSb:
      return {true, true, false, false};
    case WlVariant::WdaSb:
      return {true, true, false, true};
  }
  return {};
}

// String kinds share one dictionary; the prefix keeps atomic attribute
// renders, relabeling tuples and fused channel pairs from ever colliding.
std::string atomic_string(const std::string& render) { return "0|" + render; }

std::string render_base(const ConvGraph& g, VertexId u, AttributeBase base,
                        std::optional<int> channel_sign) {
  switch (base) {
    case AttributeBase::Degree:
      return std::to_string(g.degree(u, EdgeMode::All, channel_sign));
    case AttributeBase::Author:
      return g.attribute(u).author;
    case AttributeBase::Distance:
      return distance_to_string(g.attribute(u).distance);
    case AttributeBase::Target:
      return g.attribute(u).target ? "1" : "0";
  }
  return {};
}

std::string initial_render(const ConvGraph& g, VertexId u, const AttributeScheme& scheme,
                           std::optional<int> channel_sign) {
  std::string out;
  for (AttributeBase base : scheme.parts) {
    if (!out.empty()) out.push_back('|');
    out += render_base(g, u, base, channel_sign);
  }
  return atomic_string(out);
}

std::string join_sorted(std::vector<std::string>& items) {
  std::sort(items.begin(), items.end());
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out.push_back(';');
    out += items[i];
  }
  return out;
}

std::string fused_string(std::uint32_t plus_id, std::uint32_t minus_id) {
  return "2|" + std::to_string(plus_id) + "|" + std::to_string(minus_id);
}

// Quartile prefixes per vertex, computed once per graph (weights never
// change between iterations).
using QuartileIndex = std::map<EdgeKey, int>;

QuartileIndex quartiles_of(const ConvGraph& g) {
  QuartileIndex all;
  for (VertexId u : g.vertex_ids()) {
    auto q = edge_quartiles(g, u);
    all.insert(q.begin(), q.end());
  }
  return all;
}

std::string single_tuple(const ConvGraph& g, VertexId u, const VariantTraits& traits,
                         const QuartileIndex& quartiles,
                         const std::map<VertexId, std::uint32_t>& prev) {
  const EdgeMode mode = traits.out_neighborhood ? EdgeMode::Out : EdgeMode::All;
  std::vector<std::string> items;
  for (const auto& [v, data] : g.neighbors(u, mode)) {
    std::string item;
    if (traits.sign_prefix) {
      const int q = traits.real_quartiles ? quartiles.at({u, v}) : 0;
      item = std::to_string(q) + "," + (data.sign > 0 ? "+" : "-") + "," +
             std::to_string(prev.at(v));
    } else {
      item = std::to_string(prev.at(v));
    }
    items.push_back(std::move(item));
  }
  return "1|" + std::to_string(prev.at(u)) + "|" + join_sorted(items);
}

// Structural-balance update: the two sorted collections gather the
// same-channel labels of positive out-neighbors and the crossed-channel
// labels of negative out-neighbors.
std::string dual_tuple(const ConvGraph& g, VertexId u, const VariantTraits& traits,
                       const QuartileIndex& quartiles,
                       const std::map<VertexId, std::uint32_t>& same,
                       const std::map<VertexId, std::uint32_t>& crossed) {
  std::vector<std::string> pos_items, neg_items;
  for (const auto& [v, data] : g.neighbors(u, EdgeMode::Out)) {
    const int q = traits.real_quartiles ? quartiles.at({u, v}) : 0;
    if (data.sign > 0) {
      pos_items.push_back(std::to_string(q) + "," + std::to_string(same.at(v)));
    } else {
      neg_items.push_back(std::to_string(q) + "," + std::to_string(crossed.at(v)));
    }
  }
  return "1|" + std::to_string(same.at(u)) + "|" + join_sorted(pos_items) + "|" +
         join_sorted(neg_items);
}

}  // namespace

WlStates run_wl(const std::vector<ConvGraph>& corpus, const WlConfig& cfg) {
  cfg.validate();
  const VariantTraits traits = traits_of(cfg.variant);
  const int T = cfg.iterations;

  WlStates states;
  states.dual_channel = traits.dual;
  states.labels.resize(corpus.size());
  if (traits.dual) {
    states.plus.resize(corpus.size());
    states.minus.resize(corpus.size());
  }

  std::vector<QuartileIndex> quartiles;
  quartiles.reserve(corpus.size());
  for (const ConvGraph& g : corpus) {
    quartiles.push_back(traits.real_quartiles ? quartiles_of(g) : QuartileIndex{});
  }

  // All per-vertex strings of the current round, across the whole corpus.
  // Ids are assigned per round so they only depend on the string sets,
  // never on vertex numbering.
  for (int t = 0; t <= T; ++t) {
    std::vector<std::vector<std::pair<VertexId, std::string>>> plus_round(corpus.size());
    std::vector<std::vector<std::pair<VertexId, std::string>>> minus_round(corpus.size());
    std::vector<std::string> round_strings;

    for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
      const ConvGraph& g = corpus[gi];
      for (VertexId u : g.vertex_ids()) {
        if (t == 0) {
          if (traits.dual) {
            plus_round[gi].emplace_back(u, initial_render(g, u, cfg.scheme, +1));
            minus_round[gi].emplace_back(u, initial_render(g, u, cfg.scheme, -1));
          } else {
            plus_round[gi].emplace_back(u, initial_render(g, u, cfg.scheme, std::nullopt));
          }
        } else {
          if (traits.dual) {
            plus_round[gi].emplace_back(
                u, dual_tuple(g, u, traits, quartiles[gi], states.plus[gi][t - 1],
                              states.minus[gi][t - 1]));
            minus_round[gi].emplace_back(
                u, dual_tuple(g, u, traits, quartiles[gi], states.minus[gi][t - 1],
                              states.plus[gi][t - 1]));
          } else {
            plus_round[gi].emplace_back(
                u, single_tuple(g, u, traits, quartiles[gi], states.labels[gi][t - 1]));
          }
        }
      }
    }

    for (const auto& per_graph : plus_round) {
      for (const auto& [u, s] : per_graph) round_strings.push_back(s);
    }
    for (const auto& per_graph : minus_round) {
      for (const auto& [u, s] : per_graph) round_strings.push_back(s);
    }
    states.dictionary.intern_round(round_strings);

    for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
      if (traits.dual) {
        std::map<VertexId, std::uint32_t> p, m;
        for (const auto& [u, s] : plus_round[gi]) p[u] = states.dictionary.id(s);
        for (const auto& [u, s] : minus_round[gi]) m[u] = states.dictionary.id(s);
        states.plus[gi].push_back(std::move(p));
        states.minus[gi].push_back(std::move(m));
      } else {
        std::map<VertexId, std::uint32_t> l;
        for (const auto& [u, s] : plus_round[gi]) l[u] = states.dictionary.id(s);
        states.labels[gi].push_back(std::move(l));
      }
    }

    if (traits.dual) {
      // Fused label of this iteration: f applied to the channel pair.
      std::vector<std::string> fused_round;
      for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
        for (VertexId u : corpus[gi].vertex_ids()) {
          fused_round.push_back(
              fused_string(states.plus[gi][t].at(u), states.minus[gi][t].at(u)));
        }
      }
      states.dictionary.intern_round(fused_round);
      for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
        std::map<VertexId, std::uint32_t> f;
        for (VertexId u : corpus[gi].vertex_ids()) {
          f[u] = states.dictionary.id(
              fused_string(states.plus[gi][t].at(u), states.minus[gi][t].at(u)));
        }
        states.labels[gi].push_back(std::move(f));
      }
    }
  }
  return states;
}

DocumentCorpus build_documents(const std::vector<ConvGraph>& corpus, const WlConfig& cfg) {
  WlStates states = run_wl(corpus, cfg);
  DocumentCorpus out;
  out.documents.reserve(corpus.size());
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    GraphDocument doc;
    doc.graph_id = corpus[gi].id();
    for (std::size_t t = 0; t < states.labels[gi].size(); ++t) {
      for (const auto& [u, id] : states.labels[gi][t]) doc.labels.push_back(id);
      if (states.dual_channel && cfg.include_channel_labels) {
        for (const auto& [u, id] : states.plus[gi][t]) doc.labels.push_back(id);
        for (const auto& [u, id] : states.minus[gi][t]) doc.labels.push_back(id);
      }
    }
    out.documents.push_back(std::move(doc));
  }
  out.dictionary = std::move(states.dictionary);
  return out;
}

GraphDocument build_document(const ConvGraph& g, const WlConfig& cfg) {
  return build_documents({g}, cfg).documents.front();
}

void save_documents(const DocumentCorpus& corpus, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
  for (const GraphDocument& doc : corpus.documents) {
    out << doc.graph_id;
    for (std::uint32_t id : doc.labels) out << ' ' << id;
    out << '\n';
  }
}

}  // namespace convgraph
