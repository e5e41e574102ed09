#include "bibval/ratings.hpp"

#include <algorithm>
#include <stdexcept>

namespace bibval {

int increment_of(int score) {
  switch (score) {
    case 6: return 1;
    case 8: return 2;
    case 10: return 3;
    default:
      throw std::invalid_argument("rating score must be 6, 8 or 10, got " +
                                  std::to_string(score));
  }
}

int ffa(const std::vector<int>& scores) {
  if (scores.empty()) throw std::invalid_argument("ffa requires at least one rating");
  int best = 0;
  for (int s : scores) {
    increment_of(s);  // validates
    best = std::max(best, s);
  }
  // One maximal rating is the base; every other rating adds its increment.
  int total = best;
  bool base_consumed = false;
  for (int s : scores) {
    if (!base_consumed && s == best) {
      base_consumed = true;
      continue;
    }
    total += increment_of(s);
  }
  return total;
}

std::vector<FfaScore> ffa_table(const Corpus& c) {
  std::vector<FfaScore> out;
  for (const auto& id : c.rated_papers()) {
    std::vector<int> scores;
    for (const auto& r : c.ratings_of(id)) scores.push_back(r.score);
    out.push_back({id, ffa(scores), static_cast<int>(scores.size())});
  }
  return out;
}

}  // namespace bibval
