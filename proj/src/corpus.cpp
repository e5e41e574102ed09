#include "bibval/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bibval/csv.hpp"

namespace bibval {

DocType parse_doc_type(const std::string& s) {
  if (s == "article") return DocType::article;
  if (s == "note") return DocType::note;
  if (s == "review") return DocType::review;
  if (s == "other") return DocType::other;
  throw LoadError("unknown doc_type '" + s + "'");
}

std::string to_string(DocType t) {
  switch (t) {
    case DocType::article: return "article";
    case DocType::note: return "note";
    case DocType::review: return "review";
    case DocType::other: return "other";
  }
  return "other";
}

const Paper& Corpus::paper(const PaperId& id) const {
  auto it = papers_.find(id);
  if (it == papers_.end()) throw std::out_of_range("unknown paper id '" + id + "'");
  return it->second;
}

namespace {
const std::vector<PaperId> kNoNeighbors;
const std::vector<RatingRecord> kNoRatings;
}  // namespace

const std::vector<PaperId>& Corpus::incoming(const PaperId& id) const {
  paper(id);  // existence check
  auto it = incoming_.find(id);
  return it == incoming_.end() ? kNoNeighbors : it->second;
}

const std::vector<PaperId>& Corpus::outgoing(const PaperId& id) const {
  paper(id);
  auto it = outgoing_.find(id);
  return it == outgoing_.end() ? kNoNeighbors : it->second;
}

const std::vector<RatingRecord>& Corpus::ratings_of(const PaperId& id) const {
  paper(id);
  auto it = ratings_.find(id);
  return it == ratings_.end() ? kNoRatings : it->second;
}

Corpus::Builder& Corpus::Builder::add_paper(Paper p) {
  papers_.push_back(std::move(p));
  return *this;
}

Corpus::Builder& Corpus::Builder::add_edge(const PaperId& citing, const PaperId& cited) {
  raw_edges_.push_back({citing, cited});
  return *this;
}

Corpus::Builder& Corpus::Builder::add_rating(const PaperId& paper, const RaterId& rater,
                                             int score) {
  raw_ratings_.push_back({paper, rater, score});
  return *this;
}

Corpus Corpus::Builder::build(LoadSummary* summary) && {
  return assemble(summary, true);
}

Corpus Corpus::Builder::build_unchecked(LoadSummary* summary) && {
  return assemble(summary, false);
}

Corpus Corpus::Builder::assemble(LoadSummary* summary, bool strict) {
  Corpus c;
  c.census_year_ = census_year_;

  for (auto& p : papers_) {
    if (strict) {
      if (p.categories.empty()) {
        throw LoadError("paper '" + p.paper_id + "' has an empty category list");
      }
      std::set<CategoryId> seen(p.categories.begin(), p.categories.end());
      if (seen.size() != p.categories.size()) {
        throw LoadError("paper '" + p.paper_id + "' lists a duplicate category");
      }
    }
    auto id = p.paper_id;
    if (!c.papers_.emplace(id, std::move(p)).second) {
      throw LoadError("duplicate paper id '" + id + "'");
    }
  }

  std::set<std::pair<PaperId, PaperId>> edge_set;
  std::size_t duplicates = 0;
  std::size_t outside_census = 0;
  for (const auto& e : raw_edges_) {
    auto citing = c.papers_.find(e.citing_id);
    bool resolved = citing != c.papers_.end() && c.papers_.count(e.cited_id) != 0;
    if (!resolved) {
      if (strict) {
        const auto& missing = citing == c.papers_.end() ? e.citing_id : e.cited_id;
        throw LoadError("citation edge references unknown paper id '" + missing + "'");
      }
      c.edges_.push_back(e);  // kept for validate_corpus, not in adjacency
      continue;
    }
    if (citing->second.pub_year > census_year_) {
      ++outside_census;
      continue;
    }
    if (!edge_set.emplace(e.citing_id, e.cited_id).second) {
      ++duplicates;
    }
  }
  for (const auto& [citing, cited] : edge_set) {
    c.edges_.push_back({citing, cited});
    c.incoming_[cited].push_back(citing);
    c.outgoing_[citing].push_back(cited);
  }

  std::set<std::pair<PaperId, RaterId>> rating_keys;
  for (const auto& r : raw_ratings_) {
    if (!c.papers_.count(r.paper_id)) {
      if (strict) {
        throw LoadError("rating references unknown paper id '" + r.paper_id + "'");
      }
      continue;
    }
    if (strict) {
      if (r.score != 6 && r.score != 8 && r.score != 10) {
        throw LoadError("rating for paper '" + r.paper_id + "' has invalid score " +
                        std::to_string(r.score));
      }
      if (!rating_keys.emplace(r.paper_id, r.rater_id).second) {
        throw LoadError("duplicate rating for paper '" + r.paper_id + "' by rater '" +
                        r.rater_id + "'");
      }
    }
    c.ratings_[r.paper_id].push_back(r);
  }
  for (auto& [id, list] : c.ratings_) {
    std::sort(list.begin(), list.end(),
              [](const RatingRecord& a, const RatingRecord& b) { return a.rater_id < b.rater_id; });
    c.rated_papers_.push_back(id);
  }
  std::sort(c.rated_papers_.begin(), c.rated_papers_.end());

  if (summary) {
    summary->papers_loaded = c.papers_.size();
    summary->edges_loaded = c.edges_.size();
    summary->duplicate_edges = duplicates;
    summary->edges_outside_census = outside_census;
    summary->ratings_loaded = raw_ratings_.size();
  }
  return c;
}

namespace {

int parse_year(const std::string& s, const csv::Reader& r) {
  if (s.size() != 4 || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw LoadError(r.source_name() + ": invalid year '" + s + "' (line " +
                    std::to_string(r.line()) + ")");
  }
  return std::stoi(s);
}

std::vector<CategoryId> split_categories(const std::string& s) {
  std::vector<CategoryId> out;
  std::string cur;
  std::stringstream ss(s);
  while (std::getline(ss, cur, ';')) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

[[noreturn]] void row_error(const csv::Reader& r, const std::string& what) {
  throw LoadError(r.source_name() + ": " + what + " (line " + std::to_string(r.line()) + ")");
}

}  // namespace

Corpus load_corpus(std::istream& papers_src, std::istream& citations_src,
                   std::istream* ratings_src, int census_year, LoadSummary* summary) {
  Corpus::Builder builder(census_year);

  {
    csv::Reader r(papers_src, "papers");
    auto c_id = r.column("paper_id");
    auto c_journal = r.column("journal_id");
    auto c_year = r.column("pub_year");
    auto c_type = r.column("doc_type");
    auto c_cats = r.column("categories");
    std::vector<std::string> f;
    while (r.next(f)) {
      if (f.size() != r.header().size()) row_error(r, "wrong field count");
      Paper p;
      p.paper_id = f[c_id];
      p.journal_id = f[c_journal];
      p.pub_year = parse_year(f[c_year], r);
      try {
        p.doc_type = parse_doc_type(f[c_type]);
      } catch (const LoadError& e) {
        row_error(r, e.what());
      }
      p.categories = split_categories(f[c_cats]);
      if (p.paper_id.empty()) row_error(r, "empty paper_id");
      if (p.categories.empty()) row_error(r, "paper '" + p.paper_id + "' has no categories");
      builder.add_paper(std::move(p));
    }
  }

  {
    csv::Reader r(citations_src, "citations");
    auto c_citing = r.column("citing_id");
    auto c_cited = r.column("cited_id");
    std::vector<std::string> f;
    while (r.next(f)) {
      if (f.size() != r.header().size()) row_error(r, "wrong field count");
      if (f[c_citing].empty() || f[c_cited].empty()) row_error(r, "empty paper id in edge");
      builder.add_edge(f[c_citing], f[c_cited]);
    }
  }

  if (ratings_src) {
    csv::Reader r(*ratings_src, "ratings");
    auto c_paper = r.column("paper_id");
    auto c_rater = r.column("rater_id");
    auto c_score = r.column("score");
    std::vector<std::string> f;
    while (r.next(f)) {
      if (f.size() != r.header().size()) row_error(r, "wrong field count");
      int score = 0;
      try {
        score = std::stoi(f[c_score]);
      } catch (const std::exception&) {
        row_error(r, "invalid score '" + f[c_score] + "'");
      }
      builder.add_rating(f[c_paper], f[c_rater], score);
    }
  }

  return std::move(builder).build(summary);
}

Corpus load_corpus_files(const std::string& papers_path, const std::string& citations_path,
                         const std::optional<std::string>& ratings_path, int census_year,
                         LoadSummary* summary) {
  std::ifstream papers(papers_path);
  if (!papers) throw IoError("cannot open papers file '" + papers_path + "'");
  std::ifstream citations(citations_path);
  if (!citations) throw IoError("cannot open citations file '" + citations_path + "'");
  std::ifstream ratings;
  if (ratings_path) {
    ratings.open(*ratings_path);
    if (!ratings) throw IoError("cannot open ratings file '" + *ratings_path + "'");
  }
  return load_corpus(papers, citations, ratings_path ? &ratings : nullptr, census_year, summary);
}

std::vector<std::string> validate_corpus(const Corpus& c) {
  std::vector<std::string> out;
  for (const auto& [id, p] : c.papers()) {
    if (p.categories.empty()) {
      out.push_back("paper '" + id + "': empty category list");
    }
    std::set<CategoryId> seen(p.categories.begin(), p.categories.end());
    if (seen.size() != p.categories.size()) {
      out.push_back("paper '" + id + "': duplicate category");
    }
  }
  std::set<std::pair<PaperId, PaperId>> edge_set;
  for (const auto& e : c.edges()) {
    if (!c.contains(e.citing_id) || !c.contains(e.cited_id)) {
      out.push_back("edge " + e.citing_id + "->" + e.cited_id + ": unresolved paper id");
      continue;
    }
    if (!edge_set.emplace(e.citing_id, e.cited_id).second) {
      out.push_back("edge " + e.citing_id + "->" + e.cited_id + ": duplicated");
    }
  }
  for (const auto& [id, p] : c.papers()) {
    std::set<std::pair<PaperId, RaterId>> keys;
    for (const auto& r : c.ratings_of(id)) {
      if (r.score != 6 && r.score != 8 && r.score != 10) {
        out.push_back("rating of '" + id + "' by '" + r.rater_id + "': score " +
                      std::to_string(r.score) + " outside {6,8,10}");
      }
      if (!keys.emplace(r.paper_id, r.rater_id).second) {
        out.push_back("rating of '" + id + "' by '" + r.rater_id + "': duplicate rater");
      }
    }
  }
  return out;
}

std::uint64_t corpus_checksum(const Corpus& c) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ull;
    }
    h ^= 0x1f;
    h *= 1099511628211ull;
  };
  mix(std::to_string(c.census_year()));
  for (const auto& [id, p] : c.papers()) {
    mix(id);
    mix(p.journal_id);
    mix(std::to_string(p.pub_year));
    mix(to_string(p.doc_type));
    for (const auto& cat : p.categories) mix(cat);
  }
  for (const auto& e : c.edges()) {
    mix(e.citing_id);
    mix(e.cited_id);
  }
  for (const auto& id : c.rated_papers()) {
    for (const auto& r : c.ratings_of(id)) {
      mix(r.paper_id);
      mix(r.rater_id);
      mix(std::to_string(r.score));
    }
  }
  return h;
}

}  // namespace bibval
