#pragma once

#include <cstdint>
#include <string>

#include "convgraph/chat.hpp"
#include "convgraph/graph.hpp"
#include "convgraph/sentiment.hpp"

namespace convgraph {

/// Which slice of the context period the graph is built from. Before/After
/// keep the corresponding side of the targeted message plus the targeted
/// message itself.
enum class Scope { Full, Before, After };

std::string to_string(Scope scope);
Scope scope_from_string(const std::string& text);

struct ExtractionConfig {
  std::size_t context_size = 250;  // messages kept on each side of the target
  std::size_t window_size = 10;    // sliding-window length in messages
  Scope scope = Scope::Full;
  bool signed_edges = true;  // run sentiment scoring; false -> all signs +1

  void validate() const;
};

/// Builds the conversational graph of one conversation: a window of
/// window_size messages slides one message at a time over the context
/// period; inside each window, every message interacts with every earlier
/// window message by a different author, incrementing the weight of the
/// edge later-author -> earlier-author and accumulating the later message's
/// polarity as sign evidence. The final sign of an edge is +1 when its
/// accumulated evidence is >= 0. The targeted vertex is the author of the
/// flagged message.
ConvGraph extract_graph(const Conversation& conv, const ExtractionConfig& cfg,
                        const SentimentScorer& scorer);

}  // namespace convgraph
