#pragma once

#include <vector>

#include "bibval/corpus.hpp"

namespace bibval {

/// Aggregate peer score for one paper.
struct FfaScore {
  PaperId paper_id;
  int ffa = 0;        // >= 6
  int n_ratings = 0;  // >= 1
};

/// Increment contributed by an additional rating: 6->1, 8->2, 10->3.
int increment_of(int score);

/// Highest score plus one increment per additional rating.
/// Order-independent; throws std::invalid_argument on an empty list or a
/// score outside {6, 8, 10}.
int ffa(const std::vector<int>& scores);

/// One entry per rated paper, sorted by paper id. Unrated papers are absent.
std::vector<FfaScore> ffa_table(const Corpus& c);

}  // namespace bibval
