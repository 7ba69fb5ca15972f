#include "convgraph/features_text.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "convgraph/sentiment.hpp"

namespace convgraph {

const std::array<const char*, 3> kTextFeatureNames = {
    "capital_ratio", "abuse_tfidf", "naive_bayes"};

TextCorpusStats TextCorpusStats::fit(const std::vector<std::string>& texts,
                                     const std::vector<ClassLabel>& labels) {
  if (texts.size() != labels.size()) {
    throw std::invalid_argument("text stats: texts/labels size mismatch");
  }
  TextCorpusStats stats;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    const std::vector<std::string> tokens = tokenize(texts[i]);
    const bool abusive = labels[i] == ClassLabel::Abusive;
    if (abusive) {
      ++stats.abusive_docs;
      std::unordered_set<std::string> distinct(tokens.begin(), tokens.end());
      for (const std::string& t : distinct) stats.abusive_doc_frequency[t] += 1;
    } else {
      ++stats.non_abusive_docs;
    }
    for (const std::string& t : tokens) {
      stats.vocabulary.insert(t);
      if (abusive) {
        stats.abusive_token_counts[t] += 1;
        ++stats.abusive_total_tokens;
      } else {
        stats.non_abusive_token_counts[t] += 1;
        ++stats.non_abusive_total_tokens;
      }
    }
  }
  return stats;
}

double capital_ratio(std::string_view text) {
  long letters = 0, uppercase = 0;
  for (char c : text) {
    const unsigned char uc = static_cast<unsigned char>(c);
    if (std::isalpha(uc)) {
      ++letters;
      if (std::isupper(uc)) ++uppercase;
    }
  }
  return letters > 0 ? static_cast<double>(uppercase) / static_cast<double>(letters) : 0.0;
}

double abuse_tfidf_score(std::string_view text, const TextCorpusStats& stats) {
  const std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty()) return 0.0;

  std::unordered_map<std::string, std::size_t> counts;
  for (const std::string& t : tokens) counts[t] += 1;

  const double n_docs = static_cast<double>(stats.abusive_docs);
  double total = 0.0;
  for (const auto& [token, count] : counts) {
    const auto df_it = stats.abusive_doc_frequency.find(token);
    const double df = df_it == stats.abusive_doc_frequency.end()
                          ? 0.0
                          : static_cast<double>(df_it->second);
    const double tf = static_cast<double>(count) / static_cast<double>(tokens.size());
    const double idf = std::log((1.0 + n_docs) / (1.0 + df)) + 1.0;
    total += tf * idf;
  }
  return total / static_cast<double>(counts.size());
}

double naive_bayes_score(std::string_view text, const TextCorpusStats& stats) {
  const double total_docs =
      static_cast<double>(stats.abusive_docs + stats.non_abusive_docs);
  if (total_docs == 0.0 || stats.abusive_docs == 0 || stats.non_abusive_docs == 0) {
    throw std::invalid_argument("naive bayes: both classes required in training stats");
  }
  double score = std::log(static_cast<double>(stats.abusive_docs) / total_docs) -
                 std::log(static_cast<double>(stats.non_abusive_docs) / total_docs);

  const double v = static_cast<double>(stats.vocabulary.size());
  for (const std::string& token : tokenize(text)) {
    if (!stats.vocabulary.count(token)) continue;
    const auto a_it = stats.abusive_token_counts.find(token);
    const auto n_it = stats.non_abusive_token_counts.find(token);
    const double a_count = a_it == stats.abusive_token_counts.end()
                               ? 0.0
                               : static_cast<double>(a_it->second);
    const double n_count = n_it == stats.non_abusive_token_counts.end()
                               ? 0.0
                               : static_cast<double>(n_it->second);
    score += std::log((a_count + 1.0) /
                      (static_cast<double>(stats.abusive_total_tokens) + v));
    score -= std::log((n_count + 1.0) /
                      (static_cast<double>(stats.non_abusive_total_tokens) + v));
  }
  return score;
}

std::array<double, 3> text_best_features(const Message& msg, const TextCorpusStats& stats) {
  return {capital_ratio(msg.text), abuse_tfidf_score(msg.text, stats),
          naive_bayes_score(msg.text, stats)};
}

Matrix text_feature_columns_cross_fitted(
    const std::vector<const Conversation*>& conversations, const FoldPlan& plan) {
  if (conversations.size() != plan.fold_of.size()) {
    throw std::invalid_argument("cross-fitted features: fold plan size mismatch");
  }
  Matrix columns(conversations.size(), 3);
  for (int fold = 0; fold < FoldPlan::kFolds; ++fold) {
    std::vector<std::string> texts;
    std::vector<ClassLabel> labels;
    for (std::size_t i = 0; i < conversations.size(); ++i) {
      if (plan.fold_of[i] == fold) continue;
      texts.push_back(conversations[i]->target().text);
      labels.push_back(conversations[i]->label);
    }
    const TextCorpusStats stats = TextCorpusStats::fit(texts, labels);
    for (std::size_t i = 0; i < conversations.size(); ++i) {
      if (plan.fold_of[i] != fold) continue;
      const auto features = text_best_features(conversations[i]->target(), stats);
      for (std::size_t f = 0; f < features.size(); ++f) columns(i, f) = features[f];
    }
  }
  return columns;
}

}  // namespace convgraph
