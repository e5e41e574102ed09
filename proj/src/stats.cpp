#include "bibval/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

namespace bibval::stats {

std::string to_string(EffectClass e) {
  switch (e) {
    case EffectClass::negligible: return "negligible";
    case EffectClass::small: return "small";
    case EffectClass::medium: return "medium";
    case EffectClass::large: return "large";
  }
  return "negligible";
}

SummaryStats summary_stats(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("summary_stats: empty input");
  SummaryStats s;
  s.n = values.size();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.n);
  auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  s.min = *mn;
  s.max = *mx;
  if (s.n >= 2) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(s.n - 1));
  }
  return s;
}

std::vector<double> average_ranks(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("average_ranks: empty input");
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    double midrank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = midrank;
    i = j + 1;
  }
  return ranks;
}

namespace {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double dx = x[i] - mx;
    double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw std::invalid_argument("correlation undefined for constant input");
  }
  double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
  if (x.size() < 3) throw std::invalid_argument("spearman: need n >= 3");
  return pearson(average_ranks(x), average_ranks(y));
}

std::pair<std::vector<double>, std::vector<double>> pairwise_complete(
    const std::vector<std::optional<double>>& x, const std::vector<std::optional<double>>& y) {
  if (x.size() != y.size()) throw std::invalid_argument("pairwise_complete: length mismatch");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] && y[i]) {
      xs.push_back(*x[i]);
      ys.push_back(*y[i]);
    }
  }
  return {std::move(xs), std::move(ys)};
}

double student_t_cdf(double t, double df) {
  boost::math::students_t_distribution<double> dist(df);
  return boost::math::cdf(dist, t);
}

double normal_quantile(double p) {
  boost::math::normal_distribution<double> dist;
  return boost::math::quantile(dist, p);
}

double p_value_spearman(double r, std::size_t n) {
  if (n < 3) throw std::invalid_argument("p_value_spearman: need n >= 3");
  if (std::abs(r) > 1.0) throw std::domain_error("p_value_spearman: |r| > 1");
  if (std::abs(r) == 1.0) return 0.0;
  double df = static_cast<double>(n - 2);
  double t = r * std::sqrt(df / (1.0 - r * r));
  boost::math::students_t_distribution<double> dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

std::pair<double, double> fisher_ci(double r, std::size_t n, double level) {
  if (n < 4) throw std::invalid_argument("fisher_ci: need n >= 4");
  if (!(level > 0.0 && level < 1.0)) throw std::domain_error("fisher_ci: level outside (0,1)");
  if (std::abs(r) >= 1.0) throw std::domain_error("fisher_ci: degenerate at |r| = 1");
  double z = std::atanh(r);
  double q = normal_quantile(0.5 + level / 2.0);
  double hw = q / std::sqrt(static_cast<double>(n - 3));
  return {std::tanh(z - hw), std::tanh(z + hw)};
}

double bonferroni_alpha(double alpha, std::size_t m) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("bonferroni_alpha: alpha outside (0,1)");
  if (m < 1) throw std::invalid_argument("bonferroni_alpha: m >= 1 required");
  return alpha / static_cast<double>(m);
}

EffectClass effect_class(double r) {
  double a = std::abs(r);
  if (a > 1.0) throw std::domain_error("effect_class: |r| > 1");
  if (a >= 0.5) return EffectClass::large;
  if (a >= 0.3) return EffectClass::medium;
  if (a >= 0.1) return EffectClass::small;
  return EffectClass::negligible;
}

NormalityResult normality_test(const std::vector<double>& values) {
  const std::size_t n_sz = values.size();
  if (n_sz < 8) throw std::invalid_argument("normality_test: need n >= 8");
  const double n = static_cast<double>(n_sz);

  double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double v : values) {
    double d = v - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (m2 == 0.0) throw std::invalid_argument("normality_test: constant input");

  NormalityResult res;

  // D'Agostino (1970) transformed skewness.
  {
    double g1 = m3 / std::pow(m2, 1.5);
    double y = g1 * std::sqrt((n + 1.0) * (n + 3.0) / (6.0 * (n - 2.0)));
    double beta2 = 3.0 * (n * n + 27.0 * n - 70.0) * (n + 1.0) * (n + 3.0) /
                   ((n - 2.0) * (n + 5.0) * (n + 7.0) * (n + 9.0));
    double w2 = -1.0 + std::sqrt(2.0 * (beta2 - 1.0));
    double delta = 1.0 / std::sqrt(std::log(std::sqrt(w2)));
    double alpha = std::sqrt(2.0 / (w2 - 1.0));
    double ya = y / alpha;
    res.skew_z = delta * std::log(ya + std::sqrt(ya * ya + 1.0));
  }

  // Anscombe-Glynn (1983) transformed kurtosis.
  {
    double b2 = m4 / (m2 * m2);
    double eb2 = 3.0 * (n - 1.0) / (n + 1.0);
    double vb2 = 24.0 * n * (n - 2.0) * (n - 3.0) / ((n + 1.0) * (n + 1.0) * (n + 3.0) * (n + 5.0));
    double x = (b2 - eb2) / std::sqrt(vb2);
    double sqrt_beta1 = 6.0 * (n * n - 5.0 * n + 2.0) / ((n + 7.0) * (n + 9.0)) *
                        std::sqrt(6.0 * (n + 3.0) * (n + 5.0) / (n * (n - 2.0) * (n - 3.0)));
    double a = 6.0 + 8.0 / sqrt_beta1 *
                         (2.0 / sqrt_beta1 + std::sqrt(1.0 + 4.0 / (sqrt_beta1 * sqrt_beta1)));
    double term = (1.0 - 2.0 / a) / (1.0 + x * std::sqrt(2.0 / (a - 4.0)));
    res.kurt_z = ((1.0 - 2.0 / (9.0 * a)) - std::cbrt(term)) / std::sqrt(2.0 / (9.0 * a));
  }

  res.omnibus_k2 = res.skew_z * res.skew_z + res.kurt_z * res.kurt_z;

  boost::math::normal_distribution<double> norm;
  res.p_skew = 2.0 * boost::math::cdf(boost::math::complement(norm, std::abs(res.skew_z)));
  res.p_kurt = 2.0 * boost::math::cdf(boost::math::complement(norm, std::abs(res.kurt_z)));
  boost::math::chi_squared_distribution<double> chi2(2.0);
  res.p_omnibus = boost::math::cdf(boost::math::complement(chi2, res.omnibus_k2));
  return res;
}

}  // namespace bibval::stats
