#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace bibval {

using PaperId = std::string;
using JournalId = std::string;
using CategoryId = std::string;
using RaterId = std::string;

enum class DocType { article, note, review, other };

DocType parse_doc_type(const std::string& s);
std::string to_string(DocType t);

/// Eligible for percentile reference sets.
inline bool percentile_eligible(DocType t) {
  return t == DocType::article || t == DocType::note || t == DocType::review;
}

struct Paper {
  PaperId paper_id;
  JournalId journal_id;
  int pub_year = 0;
  DocType doc_type = DocType::other;
  std::vector<CategoryId> categories;  // non-empty, no duplicates, order preserved
};

struct CitationEdge {
  PaperId citing_id;
  PaperId cited_id;
};

struct RatingRecord {
  PaperId paper_id;
  RaterId rater_id;
  int score = 0;  // 6, 8 or 10
};

struct LoadSummary {
  std::size_t papers_loaded = 0;
  std::size_t edges_loaded = 0;
  std::size_t duplicate_edges = 0;
  std::size_t edges_outside_census = 0;
  std::size_t ratings_loaded = 0;
};

struct LoadError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File could not be opened or written; distinct from data-level LoadError
/// so callers can map it to a different exit code.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Immutable citation corpus. Construct via load_corpus or Builder;
/// safe to share across threads once built.
class Corpus {
 public:
  class Builder;

  const std::map<PaperId, Paper>& papers() const { return papers_; }
  const Paper& paper(const PaperId& id) const;
  bool contains(const PaperId& id) const { return papers_.count(id) != 0; }

  const std::vector<CitationEdge>& edges() const { return edges_; }

  /// Distinct citers of p, sorted. Empty for uncited papers.
  const std::vector<PaperId>& incoming(const PaperId& id) const;
  /// Distinct papers cited by p, sorted.
  const std::vector<PaperId>& outgoing(const PaperId& id) const;

  /// Ratings for a paper, ordered by rater id; empty if unrated.
  const std::vector<RatingRecord>& ratings_of(const PaperId& id) const;
  /// Papers with at least one rating, sorted by id.
  const std::vector<PaperId>& rated_papers() const { return rated_papers_; }

  int census_year() const { return census_year_; }

 private:
  Corpus() = default;

  std::map<PaperId, Paper> papers_;
  std::vector<CitationEdge> edges_;
  std::unordered_map<PaperId, std::vector<PaperId>> incoming_;
  std::unordered_map<PaperId, std::vector<PaperId>> outgoing_;
  std::unordered_map<PaperId, std::vector<RatingRecord>> ratings_;
  std::vector<PaperId> rated_papers_;
  int census_year_ = 0;
};

/// Accumulates entities, then validates and freezes them into a Corpus.
class Corpus::Builder {
 public:
  explicit Builder(int census_year) : census_year_(census_year) {}

  Builder& add_paper(Paper p);
  Builder& add_edge(const PaperId& citing, const PaperId& cited);
  Builder& add_rating(const PaperId& paper, const RaterId& rater, int score);

  /// Validates referential integrity and invariants, applies the census
  /// filter (citing pub_year <= census_year) and edge deduplication.
  /// Throws LoadError on violation.
  Corpus build(LoadSummary* summary = nullptr) &&;

  /// Same assembly without invariant enforcement; invalid entities are
  /// kept so validate_corpus can report them. Duplicate paper ids still
  /// throw (they cannot be represented).
  Corpus build_unchecked(LoadSummary* summary = nullptr) &&;

 private:
  Corpus assemble(LoadSummary* summary, bool strict);

  int census_year_;
  std::vector<Paper> papers_;
  std::vector<CitationEdge> raw_edges_;
  std::vector<RatingRecord> raw_ratings_;
};

/// Loads a corpus from the three CSV sources. ratings_src may be null.
/// Duplicate edges are deduplicated (counted in the summary); duplicate
/// (paper, rater) ratings and malformed rows raise LoadError with the
/// offending row.
Corpus load_corpus(std::istream& papers_src, std::istream& citations_src,
                   std::istream* ratings_src, int census_year,
                   LoadSummary* summary = nullptr);

Corpus load_corpus_files(const std::string& papers_path, const std::string& citations_path,
                         const std::optional<std::string>& ratings_path, int census_year,
                         LoadSummary* summary = nullptr);

/// Re-checks every type invariant on an already built corpus. Returns one
/// human-readable description per violation; empty means clean.
std::vector<std::string> validate_corpus(const Corpus& c);

/// FNV-1a over a canonical serialization; identifies a corpus in reports.
std::uint64_t corpus_checksum(const Corpus& c);

}  // namespace bibval
