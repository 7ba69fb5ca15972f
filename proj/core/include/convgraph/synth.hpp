#pragma once

#include <cstdint>
#include <vector>

#include "convgraph/chat.hpp"

namespace convgraph {

/// Knobs of the synthetic conversation generator. Defaults mimic the shape
/// of a large in-game chat corpus: ~550 messages per conversation, ~50
/// active speakers, a 655:1890 abusive/non-abusive split, and scattered
/// background hostility in both classes.
///
/// Abusive conversations plant three kinds of signal around the flagged
/// message: the flagged author posts and is answered far more than anyone
/// else (structure), those repeated exchanges carry large weights
/// (weight/direction), and in overt cases the exchanges are hostile (sign).
/// A configurable fraction of abusive conversations is "subtle": the burst
/// happens with entirely neutral wording, so only weight-aware methods can
/// see it.
struct SynthConfig {
  std::size_t n_abusive = 655;
  std::size_t n_non_abusive = 1890;
  double mean_conversation_length = 550.0;
  double fan_in_multiplier = 6.0;          // abuser posting/reply boost
  double negative_interaction_prob = 0.75; // hostile replies to the abuser
  double insult_token_rate = 0.7;          // insults in abuser burst messages
  double background_negative_rate = 0.10;  // baseline hostility, both classes
  double subtle_fraction = 0.30;           // abusive bursts with neutral text
  std::uint64_t seed = 42;

  void validate() const;
};

/// Deterministic under cfg.seed: identical configs produce byte-identical
/// corpora.
std::vector<Conversation> generate_synthetic_corpus(const SynthConfig& cfg);

}  // namespace convgraph
