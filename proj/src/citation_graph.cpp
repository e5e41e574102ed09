#include "bibval/citation_graph.hpp"

namespace bibval {

std::size_t times_cited(const Corpus& c, const PaperId& p) {
  return c.incoming(p).size();
}

const std::vector<PaperId>& citing_papers(const Corpus& c, const PaperId& p) {
  return c.incoming(p);
}

std::size_t second_generation_citations(const Corpus& c, const PaperId& p) {
  std::size_t total = 0;
  for (const auto& q : c.incoming(p)) total += c.incoming(q).size();
  return total;
}

std::optional<double> second_gen_per_citing(const Corpus& c, const PaperId& p) {
  std::size_t tc = times_cited(c, p);
  if (tc == 0) return std::nullopt;
  return static_cast<double>(second_generation_citations(c, p)) / static_cast<double>(tc);
}

RawCounts raw_counts(const Corpus& c, const PaperId& p) {
  RawCounts rc;
  rc.times_cited = times_cited(c, p);
  rc.second_gen = second_generation_citations(c, p);
  rc.second_gen_per_citing = second_gen_per_citing(c, p);
  return rc;
}

}  // namespace bibval
