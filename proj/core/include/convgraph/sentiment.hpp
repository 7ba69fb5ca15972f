#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace convgraph {

/// Any polarity function in [-1, +1] can be plugged into graph extraction;
/// the pipeline is language-independent when signs are disabled.
using SentimentScorer = std::function<double(std::string_view)>;

/// Lowercased alphanumeric tokens (apostrophes kept inside words).
std::vector<std::string> tokenize(std::string_view text);

/// Lexicon-based scorer: (#positive tokens - #negative tokens) divided by the
/// number of lexicon tokens in the text; 0 for text without lexicon hits.
class LexiconScorer {
 public:
  LexiconScorer(std::unordered_set<std::string> positive,
                std::unordered_set<std::string> negative);

  /// Loads positive.txt / negative.txt (one token per line) from a directory.
  static LexiconScorer from_directory(const std::filesystem::path& dir);

  /// Small built-in English lexicon; the synthetic generator draws its
  /// tokens from the same lists.
  static LexiconScorer builtin();

  double operator()(std::string_view text) const;

  bool is_positive(const std::string& token) const { return positive_.count(token) > 0; }
  bool is_negative(const std::string& token) const { return negative_.count(token) > 0; }

 private:
  std::unordered_set<std::string> positive_;
  std::unordered_set<std::string> negative_;
};

/// Default token lists used by LexiconScorer::builtin() and the synthetic
/// corpus generator.
const std::vector<std::string>& builtin_positive_tokens();
const std::vector<std::string>& builtin_negative_tokens();
const std::vector<std::string>& builtin_neutral_tokens();

}  // namespace convgraph
