#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bibval/corpus.hpp"

namespace bibval::synthgen {

struct CategoryRegime {
  CategoryId id;
  double mean_citation_rate = 1.0;  // expected times_cited for this field
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t n_papers = 0;
  std::size_t n_journals = 1;
  std::vector<CategoryRegime> categories;
  double rating_fraction = 0.1;   // in (0, 1]
  double planted_rank_corr = 0.9;  // in [0, 1]
  int min_year = 0;
  int max_year = 0;
  int census_year = 0;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate_config(const GenConfig& cfg);

struct TruthEntry {
  PaperId paper_id;
  double latent_quality;  // continuous, ties-free
};

/// The latent quality draws generate_corpus uses for the same seed.
std::vector<TruthEntry> planted_truth(const GenConfig& cfg);

/// Deterministic synthetic corpus: per-paper latent quality drives both
/// expected in-degree (scaled by the paper's category rate) and, for a
/// rating_fraction subset, rating levels calibrated so the rank
/// correlation between quality and FFa approximates planted_rank_corr.
Corpus generate_corpus(const GenConfig& cfg);

/// Writes papers/citations/ratings/truth CSVs into out_dir.
void write_corpus_files(const GenConfig& cfg, const std::string& out_dir);

}  // namespace bibval::synthgen
