#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bibval/corpus.hpp"
#include "bibval/normalization.hpp"
#include "bibval/stats.hpp"

namespace bibval {

inline constexpr std::size_t kMetricCount = 7;

/// The seven paper-level metrics in their fixed reporting order.
/// Index 5 carries the reversed percentile (higher = higher impact).
extern const std::array<std::string, kMetricCount> kMetricNames;

/// Extracts metric i from an indicator vector; missing values propagate.
std::optional<double> metric_value(const IndicatorVector& v, std::size_t metric_index);

struct VariableSummary {
  std::string name;
  stats::SummaryStats stats;
  // absent when the normality test preconditions fail (n < 8, constant)
  std::optional<stats::NormalityResult> normality;
};

struct ValidationConfig {
  int jcr_year = 0;
  double alpha = 0.05;
  double confidence_level = 0.95;
};

struct ValidationReport {
  std::vector<VariableSummary> variables;            // 7 metrics + FFa
  std::vector<stats::CorrelationResult> correlations;  // one per metric, fixed order
  double alpha = 0.05;
  double alpha_adjusted = 0.05 / 7;
  double confidence_level = 0.95;
  int census_year = 0;
  int jcr_year = 0;
  std::uint64_t corpus_checksum = 0;
};

/// Restricts to rated papers, computes FFa and the seven indicators, and
/// correlates each metric with FFa under pairwise deletion, Bonferroni
/// adjustment over the seven tests, and Fisher-z confidence intervals.
/// Throws std::invalid_argument when fewer than 4 papers are rated.
ValidationReport run_validation(const Corpus& c, const ValidationConfig& cfg);

}  // namespace bibval
