#pragma once

#include <array>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "convgraph/chat.hpp"
#include "convgraph/eval.hpp"
#include "convgraph/matrix.hpp"

namespace convgraph {

/// Token statistics fitted on training-fold messages only, as required for
/// leak-free TF-IDF and naive-Bayes features.
struct TextCorpusStats {
  std::size_t abusive_docs = 0;
  std::size_t non_abusive_docs = 0;
  std::unordered_map<std::string, std::size_t> abusive_doc_frequency;
  std::unordered_map<std::string, std::uint64_t> abusive_token_counts;
  std::unordered_map<std::string, std::uint64_t> non_abusive_token_counts;
  std::uint64_t abusive_total_tokens = 0;
  std::uint64_t non_abusive_total_tokens = 0;
  std::unordered_set<std::string> vocabulary;

  static TextCorpusStats fit(const std::vector<std::string>& texts,
                             const std::vector<ClassLabel>& labels);
};

/// Uppercase letters over total letters; 0 for text without letters.
double capital_ratio(std::string_view text);

/// Mean tf-idf of the message's distinct tokens, with idf computed within
/// the abusive class: idf(w) = ln((1 + N_A) / (1 + df_A(w))) + 1 and
/// tf(w) = count(w) / message length.
double abuse_tfidf_score(std::string_view text, const TextCorpusStats& stats);

/// Log-odds of a multinomial naive-Bayes classifier with Laplace smoothing;
/// tokens outside the training vocabulary are skipped. An empty message
/// scores the prior log-odds.
double naive_bayes_score(std::string_view text, const TextCorpusStats& stats);

/// The three text best features: [capital ratio, abuse-class TF-IDF, naive
/// Bayes log-odds].
std::array<double, 3> text_best_features(const Message& msg, const TextCorpusStats& stats);

extern const std::array<const char*, 3> kTextFeatureNames;

/// Cross-fitted feature columns (one row per conversation, one column per
/// text feature): the features of a conversation's flagged message come
/// from statistics fitted on the conversations of the other folds only.
Matrix text_feature_columns_cross_fitted(
    const std::vector<const Conversation*>& conversations, const FoldPlan& plan);

}  // namespace convgraph
