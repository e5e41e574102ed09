#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bibval::stats {

struct SummaryStats {
  std::size_t n = 0;
  double mean = 0.0;
  std::optional<double> sd;  // sample sd (n-1); undefined for n == 1
  double min = 0.0;
  double max = 0.0;
};

enum class EffectClass { negligible, small, medium, large };

std::string to_string(EffectClass e);

struct CorrelationResult {
  std::string metric_name;
  std::size_t n = 0;
  double r_s = 0.0;
  double r_squared = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double p_value = 1.0;
  double alpha_adjusted = 0.05;
  bool significant = false;
  EffectClass effect = EffectClass::negligible;
};

struct NormalityResult {
  double skew_z = 0.0;
  double kurt_z = 0.0;
  double omnibus_k2 = 0.0;  // skew_z^2 + kurt_z^2
  double p_skew = 1.0;
  double p_kurt = 1.0;
  double p_omnibus = 1.0;
};

SummaryStats summary_stats(const std::vector<double>& values);

/// Ranks 1..n with tied values sharing the mean of the ranks they span.
std::vector<double> average_ranks(const std::vector<double>& values);

/// Product-moment correlation of the midranks of x and y. Requires equal
/// lengths, n >= 3, and non-constant inputs.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

/// Keeps only the indices where both values are present.
std::pair<std::vector<double>, std::vector<double>> pairwise_complete(
    const std::vector<std::optional<double>>& x, const std::vector<std::optional<double>>& y);

/// Two-sided p from t = r * sqrt((n-2) / (1-r^2)) with n-2 df; 0 at |r| = 1.
double p_value_spearman(double r, std::size_t n);

/// Fisher z interval: tanh(atanh(r) -/+ q(level) / sqrt(n-3)).
/// Requires |r| < 1 and n >= 4.
std::pair<double, double> fisher_ci(double r, std::size_t n, double level);

double bonferroni_alpha(double alpha, std::size_t m);

/// Cohen's thresholds on |r|: >= .5 large, >= .3 medium, >= .1 small.
EffectClass effect_class(double r);

/// D'Agostino skewness z, Anscombe-Glynn kurtosis z, and the K^2 omnibus
/// statistic on 2 chi-square df. Requires n >= 8 and non-constant input.
NormalityResult normality_test(const std::vector<double>& values);

/// CDF of Student's t with df degrees of freedom.
double student_t_cdf(double t, double df);

/// Standard normal quantile.
double normal_quantile(double p);

}  // namespace bibval::stats
