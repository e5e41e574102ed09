#include "bibval/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "bibval/csv.hpp"
#include "bibval/stats.hpp"

namespace bibval::synthgen {

namespace {

// Stream tags: each purpose gets its own engine so adding papers to one
// stage does not perturb draws in another.
enum StreamTag : std::uint32_t { kQuality = 1, kStructure = 2, kGraph = 3, kRatings = 4 };

std::mt19937_64 make_engine(std::uint64_t seed, StreamTag tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(tag)};
  return std::mt19937_64(seq);
}

std::string paper_id_for(std::size_t index, std::size_t n_papers) {
  std::size_t width = std::to_string(n_papers).size();
  std::string digits = std::to_string(index + 1);
  return "P" + std::string(width - std::min(width, digits.size()), '0') + digits;
}

std::vector<double> draw_qualities(const GenConfig& cfg) {
  auto eng = make_engine(cfg.seed, kQuality);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> q(cfg.n_papers);
  std::set<double> seen;
  for (auto& v : q) {
    do {
      v = unit(eng);
    } while (!seen.insert(v).second);
  }
  return q;
}

// Rating-score multisets ordered by strictly increasing FFa (6..16).
const std::vector<std::vector<int>> kScoreLadder = {
    {6},         {6, 6},      {8},          {8, 6},       {10},       {10, 6},
    {10, 8},     {10, 8, 6},  {10, 10, 6},  {10, 10, 8},  {10, 10, 10},
};

}  // namespace

void validate_config(const GenConfig& cfg) {
  if (cfg.n_papers == 0) throw std::invalid_argument("n_papers must be positive");
  if (cfg.n_journals == 0) throw std::invalid_argument("n_journals must be positive");
  if (cfg.categories.empty()) throw std::invalid_argument("at least one category is required");
  for (const auto& cat : cfg.categories) {
    if (cat.id.empty()) throw std::invalid_argument("category id must be non-empty");
    if (cat.mean_citation_rate < 0.0) {
      throw std::invalid_argument("category '" + cat.id + "' has a negative citation rate");
    }
  }
  if (!(cfg.rating_fraction > 0.0 && cfg.rating_fraction <= 1.0)) {
    throw std::invalid_argument("rating_fraction must lie in (0, 1]");
  }
  if (!(cfg.planted_rank_corr >= 0.0 && cfg.planted_rank_corr <= 1.0)) {
    throw std::invalid_argument("planted_rank_corr must lie in [0, 1]");
  }
  if (cfg.min_year > cfg.max_year) throw std::invalid_argument("min_year must not exceed max_year");
  if (cfg.max_year >= cfg.census_year) {
    throw std::invalid_argument("census_year must lie after max_year");
  }
}

std::vector<TruthEntry> planted_truth(const GenConfig& cfg) {
  validate_config(cfg);
  auto q = draw_qualities(cfg);
  std::vector<TruthEntry> out;
  out.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    out.push_back({paper_id_for(i, cfg.n_papers), q[i]});
  }
  return out;
}

Corpus generate_corpus(const GenConfig& cfg) {
  validate_config(cfg);
  const std::size_t n = cfg.n_papers;
  auto quality = draw_qualities(cfg);

  // Quality ranks 1..n (ties-free by construction).
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return quality[a] < quality[b]; });
  std::vector<double> rank_unit(n);  // rank / (n + 1), in (0, 1)
  for (std::size_t r = 0; r < n; ++r) {
    rank_unit[order[r]] = static_cast<double>(r + 1) / static_cast<double>(n + 1);
  }

  Corpus::Builder builder(cfg.census_year);

  std::vector<std::size_t> category_of(n);
  {
    auto eng = make_engine(cfg.seed, kStructure);
    std::uniform_int_distribution<std::size_t> journal_pick(0, cfg.n_journals - 1);
    std::uniform_int_distribution<std::size_t> category_pick(0, cfg.categories.size() - 1);
    std::uniform_int_distribution<int> year_pick(cfg.min_year, cfg.max_year);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
      Paper p;
      p.paper_id = paper_id_for(i, n);
      p.journal_id = "J" + std::to_string(journal_pick(eng) + 1);
      category_of[i] = category_pick(eng);
      p.categories = {cfg.categories[category_of[i]].id};
      p.pub_year = year_pick(eng);
      double t = unit(eng);
      p.doc_type = t < 0.85 ? DocType::article
                 : t < 0.92 ? DocType::review
                 : t < 0.97 ? DocType::note
                            : DocType::other;
      builder.add_paper(std::move(p));
    }
  }

  {
    auto eng = make_engine(cfg.seed, kGraph);
    std::uniform_int_distribution<std::size_t> citer_pick(0, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      // Expected in-degree: category rate scaled linearly by quality rank,
      // so the category mean stays at its configured rate.
      double lambda = 2.0 * cfg.categories[category_of[i]].mean_citation_rate * rank_unit[i];
      if (lambda <= 0.0) continue;
      std::poisson_distribution<std::size_t> in_degree(lambda);
      std::size_t k = std::min(in_degree(eng), n - 1);
      std::unordered_set<std::size_t> citers;
      while (citers.size() < k) {
        std::size_t c = citer_pick(eng);
        if (c != i) citers.insert(c);
      }
      std::vector<std::size_t> sorted(citers.begin(), citers.end());
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t c : sorted) {
        builder.add_edge(paper_id_for(c, n), paper_id_for(i, n));
      }
    }
  }

  {
    auto eng = make_engine(cfg.seed, kRatings);
    std::size_t n_rated = static_cast<std::size_t>(
        std::llround(static_cast<double>(n) * cfg.rating_fraction));
    n_rated = std::clamp<std::size_t>(n_rated, 1, n);

    // Partial Fisher-Yates: the first n_rated entries are the rated subset.
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < n_rated; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, n - 1);
      std::swap(pool[i], pool[pick(eng)]);
    }

    // Gaussian copula: the copula parameter is chosen so the population
    // rank correlation between latent quality and the rating signal is
    // the planted value (rank corr of a bivariate normal is (6/pi)asin(rho/2)).
    double rho = 2.0 * std::sin(std::numbers::pi * cfg.planted_rank_corr / 6.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    struct Rated {
      std::size_t index;
      double signal;
    };
    double noise_scale = std::sqrt(std::max(0.0, 1.0 - rho * rho));
    std::vector<Rated> rated(n_rated);
    for (std::size_t i = 0; i < n_rated; ++i) {
      std::size_t paper = pool[i];
      // Probit of the uniform quality rank is standard normal.
      double quality_normal = stats::normal_quantile(rank_unit[paper]);
      double noise = gauss(eng);
      rated[i] = {paper, rho * quality_normal + noise_scale * noise};
    }

    std::sort(rated.begin(), rated.end(), [](const Rated& a, const Rated& b) {
      if (a.signal != b.signal) return a.signal < b.signal;
      return a.index < b.index;
    });
    const std::size_t levels = kScoreLadder.size();
    for (std::size_t pos = 0; pos < n_rated; ++pos) {
      std::size_t level = pos * levels / n_rated;
      const auto& scores = kScoreLadder[level];
      for (std::size_t s = 0; s < scores.size(); ++s) {
        builder.add_rating(paper_id_for(rated[pos].index, n), "R" + std::to_string(s + 1),
                           scores[s]);
      }
    }
  }

  return std::move(builder).build();
}

void write_corpus_files(const GenConfig& cfg, const std::string& out_dir) {
  Corpus c = generate_corpus(cfg);
  auto truth = planted_truth(cfg);
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);

  {
    std::ofstream out(fs::path(out_dir) / "papers.csv");
    out << "paper_id,journal_id,pub_year,doc_type,categories\n";
    for (const auto& [id, p] : c.papers()) {
      std::string cats;
      for (std::size_t i = 0; i < p.categories.size(); ++i) {
        if (i) cats += ";";
        cats += p.categories[i];
      }
      csv::write_row(out, {id, p.journal_id, std::to_string(p.pub_year), to_string(p.doc_type),
                           cats});
    }
  }
  {
    std::ofstream out(fs::path(out_dir) / "citations.csv");
    out << "citing_id,cited_id\n";
    for (const auto& e : c.edges()) {
      csv::write_row(out, {e.citing_id, e.cited_id});
    }
  }
  {
    std::ofstream out(fs::path(out_dir) / "ratings.csv");
    out << "paper_id,rater_id,score\n";
    for (const auto& id : c.rated_papers()) {
      for (const auto& r : c.ratings_of(id)) {
        csv::write_row(out, {r.paper_id, r.rater_id, std::to_string(r.score)});
      }
    }
  }
  {
    std::ofstream out(fs::path(out_dir) / "truth.csv");
    out << "paper_id,latent_quality\n";
    out.precision(17);
    for (const auto& t : truth) {
      std::ostringstream val;
      val.precision(17);
      val << t.latent_quality;
      csv::write_row(out, {t.paper_id, val.str()});
    }
  }
}

}  // namespace bibval::synthgen
