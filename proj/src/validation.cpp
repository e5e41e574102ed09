#include "bibval/validation.hpp"

#include <cmath>
#include <stdexcept>

#include "bibval/ratings.hpp"

namespace bibval {

const std::array<std::string, kMetricCount> kMetricNames = {
    "Times Cited",
    "2nd Generation Citations",
    "2nd Generation Citations per Citing Document",
    "Journal Actual/Expected Citations",
    "Category Actual/Expected Citations",
    "Percentile in Subject Area",
    "Journal Impact Factor",
};

std::optional<double> metric_value(const IndicatorVector& v, std::size_t metric_index) {
  switch (metric_index) {
    case 0: return static_cast<double>(v.times_cited);
    case 1: return static_cast<double>(v.second_gen);
    case 2: return v.second_gen_per_citing;
    case 3: return v.journal_ae;
    case 4: return v.category_ae;
    case 5: return v.reversed_percentile;
    case 6: return v.jif;
    default: throw std::out_of_range("metric index out of range");
  }
}

namespace {

std::optional<stats::NormalityResult> try_normality(const std::vector<double>& values) {
  if (values.size() < 8) return std::nullopt;
  try {
    return stats::normality_test(values);
  } catch (const std::invalid_argument&) {
    return std::nullopt;  // constant input
  }
}

}  // namespace

ValidationReport run_validation(const Corpus& c, const ValidationConfig& cfg) {
  const auto& rated = c.rated_papers();
  if (rated.size() < 4) {
    throw std::invalid_argument("run_validation: need at least 4 rated papers, have " +
                                std::to_string(rated.size()));
  }

  BaselineTable baselines(c);

  std::vector<std::optional<double>> ffa_values;
  std::array<std::vector<std::optional<double>>, kMetricCount> metric_values;
  for (const auto& id : rated) {
    std::vector<int> scores;
    for (const auto& r : c.ratings_of(id)) scores.push_back(r.score);
    ffa_values.push_back(static_cast<double>(ffa(scores)));

    IndicatorVector v = baselines.indicator_vector(id, cfg.jcr_year);
    for (std::size_t m = 0; m < kMetricCount; ++m) {
      metric_values[m].push_back(metric_value(v, m));
    }
  }

  ValidationReport report;
  report.alpha = cfg.alpha;
  report.alpha_adjusted = stats::bonferroni_alpha(cfg.alpha, kMetricCount);
  report.confidence_level = cfg.confidence_level;
  report.census_year = c.census_year();
  report.jcr_year = cfg.jcr_year;
  report.corpus_checksum = corpus_checksum(c);

  for (std::size_t m = 0; m < kMetricCount; ++m) {
    std::vector<double> present;
    for (const auto& v : metric_values[m]) {
      if (v) present.push_back(*v);
    }
    VariableSummary vs;
    vs.name = kMetricNames[m];
    if (!present.empty()) {
      vs.stats = stats::summary_stats(present);
      vs.normality = try_normality(present);
    }
    report.variables.push_back(std::move(vs));
  }
  {
    std::vector<double> ffa_plain;
    for (const auto& v : ffa_values) ffa_plain.push_back(*v);
    VariableSummary vs;
    vs.name = "FFa";
    vs.stats = stats::summary_stats(ffa_plain);
    vs.normality = try_normality(ffa_plain);
    report.variables.push_back(std::move(vs));
  }

  for (std::size_t m = 0; m < kMetricCount; ++m) {
    auto [xs, ys] = stats::pairwise_complete(metric_values[m], ffa_values);
    stats::CorrelationResult cr;
    cr.metric_name = kMetricNames[m];
    cr.n = xs.size();
    cr.alpha_adjusted = report.alpha_adjusted;
    cr.r_s = stats::spearman(xs, ys);
    cr.r_squared = cr.r_s * cr.r_s;
    cr.p_value = stats::p_value_spearman(cr.r_s, cr.n);
    if (std::abs(cr.r_s) < 1.0 && cr.n >= 4) {
      auto [lo, hi] = stats::fisher_ci(cr.r_s, cr.n, cfg.confidence_level);
      cr.ci_low = lo;
      cr.ci_high = hi;
    } else {
      cr.ci_low = cr.ci_high = cr.r_s;  // degenerate at |r| = 1
    }
    cr.significant = cr.p_value < cr.alpha_adjusted;
    cr.effect = stats::effect_class(cr.r_s);
    report.correlations.push_back(std::move(cr));
  }
  return report;
}

}  // namespace bibval
