#include "bibval/normalization.hpp"

#include <algorithm>
#include <stdexcept>

#include "bibval/citation_graph.hpp"

namespace bibval {

BaselineTable::BaselineTable(const Corpus& c) : corpus_(&c) {
  for (const auto& [id, p] : c.papers()) {
    std::size_t tc = c.incoming(id).size();
    cited_count_[id] = tc;

    ReferenceSetKey jkey{RefScope::journal, p.journal_id, p.pub_year, p.doc_type};
    auto& js = set_stats_[jkey];
    ++js.n;
    js.citation_sum += static_cast<double>(tc);

    for (const auto& cat : p.categories) {
      ReferenceSetKey ckey{RefScope::category, cat, p.pub_year, p.doc_type};
      auto& cs = set_stats_[ckey];
      ++cs.n;
      cs.citation_sum += static_cast<double>(tc);

      if (percentile_eligible(p.doc_type)) {
        percentile_sets_[{cat, p.pub_year}].push_back(tc);
      }
    }
  }
  for (auto& [key, counts] : percentile_sets_) {
    std::sort(counts.begin(), counts.end());
  }
}

std::optional<double> BaselineTable::expected_citations(const ReferenceSetKey& key) const {
  auto it = set_stats_.find(key);
  if (it == set_stats_.end() || it->second.n == 0) return std::nullopt;
  return it->second.citation_sum / static_cast<double>(it->second.n);
}

std::optional<double> BaselineTable::journal_ae(const PaperId& p) const {
  const Paper& paper = corpus_->paper(p);
  auto expected =
      expected_citations({RefScope::journal, paper.journal_id, paper.pub_year, paper.doc_type});
  if (!expected || *expected == 0.0) return std::nullopt;
  return static_cast<double>(cited_count_.at(p)) / *expected;
}

std::optional<double> BaselineTable::category_ae(const PaperId& p) const {
  const Paper& paper = corpus_->paper(p);
  double sum = 0.0;
  std::size_t defined = 0;
  for (const auto& cat : paper.categories) {
    auto expected = expected_citations({RefScope::category, cat, paper.pub_year, paper.doc_type});
    if (expected) {
      sum += *expected;
      ++defined;
    }
  }
  if (defined == 0) return std::nullopt;
  double mean_expected = sum / static_cast<double>(defined);
  if (mean_expected == 0.0) return std::nullopt;
  return static_cast<double>(cited_count_.at(p)) / mean_expected;
}

std::optional<double> BaselineTable::percentile_in_subject(const PaperId& p) const {
  const Paper& paper = corpus_->paper(p);
  if (!percentile_eligible(paper.doc_type)) return std::nullopt;
  std::size_t own = cited_count_.at(p);
  std::optional<double> best;
  for (const auto& cat : paper.categories) {
    auto it = percentile_sets_.find({cat, paper.pub_year});
    if (it == percentile_sets_.end() || it->second.empty()) continue;
    const auto& counts = it->second;  // ascending
    auto at_or_above = counts.end() - std::lower_bound(counts.begin(), counts.end(), own);
    double pct = 100.0 * static_cast<double>(at_or_above) / static_cast<double>(counts.size());
    if (!best || pct < *best) best = pct;
  }
  return best;
}

std::optional<double> BaselineTable::journal_impact_factor(const JournalId& j,
                                                           int jcr_year) const {
  std::size_t item_count = 0;
  std::size_t citations = 0;
  for (const auto& [id, p] : corpus_->papers()) {
    if (p.journal_id != j) continue;
    if (p.pub_year != jcr_year - 1 && p.pub_year != jcr_year - 2) continue;
    ++item_count;
    for (const auto& citer : corpus_->incoming(id)) {
      if (corpus_->paper(citer).pub_year == jcr_year) ++citations;
    }
  }
  if (item_count == 0) return std::nullopt;
  return static_cast<double>(citations) / static_cast<double>(item_count);
}

NormalizedScores BaselineTable::normalized_scores(const PaperId& p, int jcr_year) const {
  NormalizedScores s;
  s.journal_ae = journal_ae(p);
  s.category_ae = category_ae(p);
  s.percentile = percentile_in_subject(p);
  if (s.percentile) s.reversed_percentile = reversed_percentile(*s.percentile);
  s.jif = journal_impact_factor(corpus_->paper(p).journal_id, jcr_year);
  return s;
}

IndicatorVector BaselineTable::indicator_vector(const PaperId& p, int jcr_year) const {
  IndicatorVector v;
  v.paper_id = p;
  RawCounts rc = raw_counts(*corpus_, p);
  v.times_cited = rc.times_cited;
  v.second_gen = rc.second_gen;
  v.second_gen_per_citing = rc.second_gen_per_citing;
  NormalizedScores s = normalized_scores(p, jcr_year);
  v.journal_ae = s.journal_ae;
  v.category_ae = s.category_ae;
  v.percentile = s.percentile;
  v.reversed_percentile = s.reversed_percentile;
  v.jif = s.jif;
  return v;
}

double reversed_percentile(double pct) {
  if (!(pct > 0.0 && pct <= 100.0)) {
    throw std::domain_error("percentile must lie in (0, 100]");
  }
  return 100.0 - pct;
}

}  // namespace bibval
