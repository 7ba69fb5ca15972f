#pragma once

#include <span>
#include <string>
#include <vector>

#include "convgraph/embedding.hpp"
#include "convgraph/matrix.hpp"

namespace convgraph {

enum class FusionStrategy { Early, Late, Hybrid };

std::string to_string(FusionStrategy s);
FusionStrategy fusion_strategy_from_string(const std::string& text);

/// Combines two representations of the same examples. Early concatenates
/// the feature blocks (dA+dB columns), Late keeps only the two classifier
/// scores, Hybrid concatenates everything (dA+dB+2). Scores must be
/// out-of-training-fold scores to keep the downstream evaluation leak-free.
Matrix fuse(const Matrix& a, const Matrix& b, std::span<const double> scores_a,
            std::span<const double> scores_b, FusionStrategy strategy);

/// Reorders the rows of `m` to follow `ids`; throws listing every id that
/// is missing from the embedding.
Matrix align_embedding_rows(const EmbeddingMatrix& m, const std::vector<std::string>& ids);

}  // namespace convgraph
