#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bibval/corpus.hpp"

namespace bibval {

enum class RefScope { journal, category };

/// Identifies one reference set: same journal (or category), publication
/// year and document type.
struct ReferenceSetKey {
  RefScope scope = RefScope::journal;
  std::string scope_id;
  int pub_year = 0;
  DocType doc_type = DocType::article;

  auto operator<=>(const ReferenceSetKey&) const = default;
};

struct NormalizedScores {
  std::optional<double> journal_ae;
  std::optional<double> category_ae;
  std::optional<double> percentile;           // in (0, 100]
  std::optional<double> reversed_percentile;  // 100 - percentile
  std::optional<double> jif;
};

/// All seven paper-level metrics; missing entries follow the per-metric
/// definitions (uncited papers, ineligible doc types, empty reference sets).
struct IndicatorVector {
  PaperId paper_id;
  std::size_t times_cited = 0;
  std::size_t second_gen = 0;
  std::optional<double> second_gen_per_citing;
  std::optional<double> journal_ae;
  std::optional<double> category_ae;
  std::optional<double> percentile;
  std::optional<double> reversed_percentile;
  std::optional<double> jif;
};

/// Reference-set baselines computed once from a corpus. Immutable; all
/// lookups afterwards are read-only and safe to run in parallel.
class BaselineTable {
 public:
  explicit BaselineTable(const Corpus& c);
  // The table keeps a reference to the corpus; a temporary would dangle.
  explicit BaselineTable(Corpus&&) = delete;

  const Corpus& corpus() const { return *corpus_; }

  /// Mean times_cited over the papers matching the key; missing when the
  /// set is empty.
  std::optional<double> expected_citations(const ReferenceSetKey& key) const;

  /// times_cited(p) / expected citations of p's journal set; missing when
  /// the expectation is missing or zero.
  std::optional<double> journal_ae(const PaperId& p) const;

  /// times_cited(p) divided by the mean of p's per-category expectations
  /// (categories with missing expectations dropped from the averaging).
  std::optional<double> category_ae(const PaperId& p) const;

  /// Percentile position of p's citation count in its best (lowest-value)
  /// category reference set; 100 means 0 citations. Missing for doc types
  /// outside {article, note, review}.
  std::optional<double> percentile_in_subject(const PaperId& p) const;

  /// Citations in jcr_year to the journal's papers from the two prior
  /// years, divided by the number of those papers. All doc types count.
  std::optional<double> journal_impact_factor(const JournalId& j, int jcr_year) const;

  IndicatorVector indicator_vector(const PaperId& p, int jcr_year) const;
  NormalizedScores normalized_scores(const PaperId& p, int jcr_year) const;

 private:
  struct SetStats {
    std::size_t n = 0;
    double citation_sum = 0.0;
  };

  const Corpus* corpus_;
  std::map<PaperId, std::size_t> cited_count_;
  std::map<ReferenceSetKey, SetStats> set_stats_;
  // (category, year) -> sorted citation counts of eligible-doc-type papers
  std::map<std::pair<CategoryId, int>, std::vector<std::size_t>> percentile_sets_;
};

/// 100 - pct; input must lie in (0, 100].
double reversed_percentile(double pct);

}  // namespace bibval
