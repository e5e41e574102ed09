#pragma once

#include <optional>
#include <vector>

#include "bibval/corpus.hpp"

namespace bibval {

/// Raw citation indicators for one paper.
struct RawCounts {
  std::size_t times_cited = 0;
  std::size_t second_gen = 0;
  std::optional<double> second_gen_per_citing;  // missing iff times_cited == 0
};

/// Number of distinct papers citing p within the census window.
std::size_t times_cited(const Corpus& c, const PaperId& p);

/// The distinct citers of p; size equals times_cited(c, p).
const std::vector<PaperId>& citing_papers(const Corpus& c, const PaperId& p);

/// Sum over q in citing_papers(p) of times_cited(q). A grandciter reached
/// through two different citers counts in both terms.
std::size_t second_generation_citations(const Corpus& c, const PaperId& p);

/// second_generation_citations / times_cited; missing for uncited papers.
std::optional<double> second_gen_per_citing(const Corpus& c, const PaperId& p);

RawCounts raw_counts(const Corpus& c, const PaperId& p);

}  // namespace bibval
