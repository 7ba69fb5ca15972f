#include "convgraph/sentiment.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace convgraph {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    const unsigned char uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc) || c == '\'') {
      current.push_back(static_cast<char>(std::tolower(uc)));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

LexiconScorer::LexiconScorer(std::unordered_set<std::string> positive,
                             std::unordered_set<std::string> negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {}

namespace {

std::unordered_set<std::string> load_token_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + file.string());
  std::unordered_set<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) tokens.insert(line);
  }
  return tokens;
}

}  // namespace

LexiconScorer LexiconScorer::from_directory(const std::filesystem::path& dir) {
  return LexiconScorer(load_token_file(dir / "positive.txt"),
                       load_token_file(dir / "negative.txt"));
}

LexiconScorer LexiconScorer::builtin() {
  std::unordered_set<std::string> pos(builtin_positive_tokens().begin(),
                                      builtin_positive_tokens().end());
  std::unordered_set<std::string> neg(builtin_negative_tokens().begin(),
                                      builtin_negative_tokens().end());
  return LexiconScorer(std::move(pos), std::move(neg));
}

double LexiconScorer::operator()(std::string_view text) const {
  long pos = 0, neg = 0;
  for (const std::string& token : tokenize(text)) {
    if (positive_.count(token)) ++pos;
    if (negative_.count(token)) ++neg;
  }
  const long hits = pos + neg;
  if (hits == 0) return 0.0;
  return static_cast<double>(pos - neg) / static_cast<double>(hits);
}

const std::vector<std::string>& builtin_positive_tokens() {
  static const std::vector<std::string> tokens = {
      "thanks", "great",  "nice",   "good",  "love", "cool", "awesome",
      "helpful", "welcome", "happy", "well", "glad", "gg",   "congrats",
  };
  return tokens;
}

const std::vector<std::string>& builtin_negative_tokens() {
  static const std::vector<std::string> tokens = {
      "idiot", "stupid", "loser", "shut", "hate",  "trash",  "dumb",
      "worst", "noob",   "ugly",  "fool", "pathetic", "garbage", "clown",
  };
  return tokens;
}

const std::vector<std::string>& builtin_neutral_tokens() {
  static const std::vector<std::string> tokens = {
      "the",   "fleet", "attack", "planet", "trade",  "resources", "alliance",
      "move",  "turn",  "build",  "ship",   "market", "price",     "defense",
      "scout", "orbit", "queue",  "mine",   "energy", "report",    "sector",
      "when",  "where", "how",    "ok",     "yes",    "no",        "maybe",
  };
  return tokens;
}

}  // namespace convgraph
