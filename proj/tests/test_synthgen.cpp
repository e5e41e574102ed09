#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <filesystem>
#include <set>

#include "bibval/citation_graph.hpp"
#include "bibval/ratings.hpp"
#include "bibval/stats.hpp"
#include "bibval/synthgen.hpp"
#include "test_helpers.hpp"

using namespace bibval;
using synthgen::GenConfig;

namespace {

GenConfig base_config() {
  GenConfig cfg;
  cfg.seed = 42;
  cfg.n_papers = 300;
  cfg.n_journals = 8;
  cfg.categories = {{"cell biology", 4.0}, {"immunology", 3.0}};
  cfg.rating_fraction = 0.3;
  cfg.planted_rank_corr = 0.9;
  cfg.min_year = 2005;
  cfg.max_year = 2008;
  cfg.census_year = 2010;
  return cfg;
}

double ffa_quality_spearman(const Corpus& c, const GenConfig& cfg) {
  auto truth = synthgen::planted_truth(cfg);
  std::map<PaperId, double> quality;
  for (const auto& t : truth) quality[t.paper_id] = t.latent_quality;
  std::vector<double> q, f;
  for (const auto& s : ffa_table(c)) {
    q.push_back(quality.at(s.paper_id));
    f.push_back(static_cast<double>(s.ffa));
  }
  return stats::spearman(q, f);
}

}  // namespace

TEST_CASE("config validation") {
  auto cfg = base_config();
  cfg.rating_fraction = 0.0;
  CHECK_THROWS_AS(synthgen::validate_config(cfg), std::invalid_argument);
  cfg = base_config();
  cfg.max_year = cfg.census_year;
  CHECK_THROWS_AS(synthgen::validate_config(cfg), std::invalid_argument);
  cfg = base_config();
  cfg.categories[0].mean_citation_rate = -1.0;
  CHECK_THROWS_AS(synthgen::validate_config(cfg), std::invalid_argument);
  cfg = base_config();
  cfg.n_papers = 0;
  CHECK_THROWS_AS(synthgen::validate_config(cfg), std::invalid_argument);
}

TEST_CASE("generation is deterministic in the seed") {
  auto cfg = base_config();
  auto a = synthgen::generate_corpus(cfg);
  auto b = synthgen::generate_corpus(cfg);
  CHECK(corpus_checksum(a) == corpus_checksum(b));

  cfg.seed = 43;
  auto other = synthgen::generate_corpus(cfg);
  CHECK(corpus_checksum(a) != corpus_checksum(other));
}

TEST_CASE("serialized corpora are byte-identical for the same config") {
  auto cfg = base_config();
  cfg.n_papers = 80;
  auto dir1 = std::filesystem::temp_directory_path() / "bibval_synth_a";
  auto dir2 = std::filesystem::temp_directory_path() / "bibval_synth_b";
  synthgen::write_corpus_files(cfg, dir1.string());
  synthgen::write_corpus_files(cfg, dir2.string());
  for (const auto* name : {"papers.csv", "citations.csv", "ratings.csv", "truth.csv"}) {
    CHECK(testing::slurp((dir1 / name).string()) == testing::slurp((dir2 / name).string()));
  }
}

TEST_CASE("generated corpora pass validation") {
  auto c = synthgen::generate_corpus(base_config());
  CHECK(validate_corpus(c).empty());
  CHECK(c.papers().size() == 300);
}

TEST_CASE("planted truth is reproducible, complete and ties-free") {
  auto cfg = base_config();
  auto a = synthgen::planted_truth(cfg);
  auto b = synthgen::planted_truth(cfg);
  REQUIRE(a.size() == cfg.n_papers);
  std::set<double> values;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].paper_id == b[i].paper_id);
    CHECK(a[i].latent_quality == b[i].latent_quality);
    values.insert(a[i].latent_quality);
  }
  CHECK(values.size() == a.size());
}

TEST_CASE("rated subset size follows round(n * fraction)") {
  auto cfg = base_config();
  cfg.n_papers = 100;
  cfg.rating_fraction = 0.1;
  auto c = synthgen::generate_corpus(cfg);
  CHECK(c.rated_papers().size() == 10);
}

TEST_CASE("noiseless planting gives near-perfect quality-FFa rank correlation") {
  auto cfg = base_config();
  cfg.n_papers = 1000;
  cfg.planted_rank_corr = 1.0;
  auto c = synthgen::generate_corpus(cfg);
  // FFa takes only 11 distinct values, so midrank ties cap the coefficient
  // just below the noiseless ideal of 1.
  CHECK(ffa_quality_spearman(c, cfg) > 0.98);
}

TEST_CASE("independent ratings stay uncorrelated with citations") {
  auto cfg = base_config();
  cfg.n_papers = 2000;
  cfg.rating_fraction = 0.5;
  cfg.planted_rank_corr = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    cfg.seed = seed;
    auto c = synthgen::generate_corpus(cfg);
    std::vector<double> tc, f;
    for (const auto& s : ffa_table(c)) {
      tc.push_back(static_cast<double>(times_cited(c, s.paper_id)));
      f.push_back(static_cast<double>(s.ffa));
    }
    CHECK(std::abs(stats::spearman(tc, f)) < 0.15);
  }
}

TEST_CASE("field regimes reproduce the configured rate ratio") {
  GenConfig cfg;
  cfg.seed = 7;
  cfg.n_papers = 5000;
  cfg.n_journals = 20;
  cfg.categories = {{"cell biology", 2.3}, {"immunology", 1.87}};
  cfg.rating_fraction = 0.1;
  cfg.planted_rank_corr = 0.9;
  cfg.min_year = 2005;
  cfg.max_year = 2008;
  cfg.census_year = 2010;
  auto c = synthgen::generate_corpus(cfg);

  double sum_cell = 0, sum_imm = 0;
  std::size_t n_cell = 0, n_imm = 0;
  for (const auto& [id, p] : c.papers()) {
    double tc = static_cast<double>(times_cited(c, id));
    if (p.categories[0] == "cell biology") {
      sum_cell += tc;
      ++n_cell;
    } else {
      sum_imm += tc;
      ++n_imm;
    }
  }
  double ratio = (sum_cell / n_cell) / (sum_imm / n_imm);
  CHECK(ratio == doctest::Approx(2.3 / 1.87).epsilon(0.10));
}
