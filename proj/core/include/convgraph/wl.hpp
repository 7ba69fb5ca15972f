#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "convgraph/graph.hpp"

namespace convgraph {

/// Relabeling flavors. Plain is the classic degree-agnostic update over the
/// whole neighborhood; the N variants prefix each out-neighbor with the edge
/// sign (and quartile for the Wda one); the Sb variants run the two-channel
/// structural-balance update. SignedN/SignedSb are the WdaN/WdaSb rules with
/// every quartile prefix pinned to a constant, which ablates the weight
/// information.
enum class WlVariant { Plain, SignedN, WdaN, SignedSb, WdaSb };

std::string to_string(WlVariant v);
WlVariant wl_variant_from_string(const std::string& text);

enum class AttributeBase { Degree, Author, Distance, Target };

/// Initial-label scheme: a single vertex attribute, or several concatenated
/// into one composite label ("degree", "author+distance", ...).
struct AttributeScheme {
  std::vector<AttributeBase> parts{AttributeBase::Degree};

  static AttributeScheme parse(const std::string& text);
  std::string to_string() const;
  void validate() const;
};

/// Injective label compression shared by a whole corpus run. New strings are
/// interned one relabeling round at a time, in sorted order within each
/// round, so label ids do not depend on vertex numbering and isomorphic
/// graphs receive identical documents.
class LabelDictionary {
 public:
  /// Assigns fresh ids to the unseen strings of a round, in sorted order.
  void intern_round(const std::vector<std::string>& round);

  std::uint32_t id(const std::string& label) const;
  bool contains(const std::string& label) const { return ids_.count(label) > 0; }
  const std::string& string_of(std::uint32_t id) const { return strings_.at(id); }
  std::size_t size() const { return strings_.size(); }

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::string> strings_;
};

/// Multiset of rooted-subgraph label ids of one graph, across all WL
/// iterations; the "document" consumed by the skip-gram trainer.
struct GraphDocument {
  std::string graph_id;
  std::vector<std::uint32_t> labels;
};

struct WlConfig {
  WlVariant variant = WlVariant::Plain;
  AttributeScheme scheme;
  int iterations = 2;  // T
  // Sb only: also collect the raw per-channel labels next to the fused ones.
  bool include_channel_labels = false;

  void validate() const;
};

/// Full per-iteration label states of a corpus run; documents are derived
/// from this. `labels[g][t]` maps vertex -> label id (for Sb variants this
/// holds the fused label of iteration t, and plus/minus hold the channels).
struct WlStates {
  std::vector<std::vector<std::map<VertexId, std::uint32_t>>> labels;
  std::vector<std::vector<std::map<VertexId, std::uint32_t>>> plus;
  std::vector<std::vector<std::map<VertexId, std::uint32_t>>> minus;
  LabelDictionary dictionary;

  bool dual_channel = false;
};

WlStates run_wl(const std::vector<ConvGraph>& corpus, const WlConfig& cfg);

struct DocumentCorpus {
  std::vector<GraphDocument> documents;
  LabelDictionary dictionary;
};

DocumentCorpus build_documents(const std::vector<ConvGraph>& corpus, const WlConfig& cfg);
GraphDocument build_document(const ConvGraph& g, const WlConfig& cfg);

/// One line per graph: graph id followed by space-separated label ids.
void save_documents(const DocumentCorpus& corpus, const std::filesystem::path& file);

}  // namespace convgraph
