#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 60);
}

}  // namespace

double t_cdf(double t, double df) {
  double log_norm = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) -
                    0.5 * std::log(df * std::acos(-1.0));
  auto density = [df, log_norm](double x) {
    return std::exp(log_norm - (df + 1.0) / 2.0 * std::log1p(x * x / df));
  };
  double x = std::abs(t);
  double central = integrate(density, 0.0, x, 1e-14);
  return t >= 0.0 ? 0.5 + central : 0.5 - central;
}

double spearman_p(double r, std::size_t n) {
  if (std::abs(r) >= 1.0) return 0.0;
  double df = static_cast<double>(n - 2);
  double t = r * std::sqrt(df / (1.0 - r * r));
  return 2.0 * (1.0 - t_cdf(std::abs(t), df));
}

double spearman_classic(const std::vector<double>& x, const std::vector<double>& y) {
  auto rx = midranks(x);
  auto ry = midranks(y);
  double n = static_cast<double>(x.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double d = rx[i] - ry[i];
    sum += d * d;
  }
  return 1.0 - 6.0 * sum / (n * (n * n - 1.0));
}

std::vector<double> midranks(const std::vector<double>& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::size_t smaller = 0, ties = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] < x[i]) ++smaller;
      if (j != i && x[j] == x[i]) ++ties;
    }
    r[i] = static_cast<double>(smaller) + 1.0 + static_cast<double>(ties) / 2.0;
  }
  return r;
}

double spearman_midrank(const std::vector<double>& x, const std::vector<double>& y) {
  auto rx = midranks(x);
  auto ry = midranks(y);
  long double mx = 0.0L, my = 0.0L;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= rx.size();
  my /= ry.size();
  long double sxy = 0.0L, sxx = 0.0L, syy = 0.0L;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    long double dx = rx[i] - mx, dy = ry[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

std::pair<double, double> fisher_ci(double r, std::size_t n, double level) {
  double q;
  if (std::abs(level - 0.95) < 1e-12) {
    q = 1.959963984540054;  // Phi^-1(0.975)
  } else {
    // Bisect Phi(q) = 0.5 + level/2 using erfc.
    double target = 0.5 + level / 2.0;
    double lo = 0.0, hi = 10.0;
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      double phi = 1.0 - 0.5 * std::erfc(mid / std::sqrt(2.0));
      (phi < target ? lo : hi) = mid;
    }
    q = 0.5 * (lo + hi);
  }
  long double z = std::atanh(static_cast<long double>(r));
  long double hw = q / std::sqrt(static_cast<long double>(n - 3));
  return {static_cast<double>(std::tanh(z - hw)), static_cast<double>(std::tanh(z + hw))};
}

Summary summary(const std::vector<double>& v) {
  Summary s{v.size(), 0.0, v[0], v[0], std::nullopt};
  long double total = 0.0L;
  for (double x : v) {
    total += x;
    s.min = std::min(s.min, x);
    s.max = std::max(s.max, x);
  }
  s.mean = static_cast<double>(total / v.size());
  if (v.size() >= 2) {
    long double ss = 0.0L;
    for (double x : v) ss += (x - s.mean) * (x - s.mean);
    s.sd = static_cast<double>(std::sqrt(ss / (v.size() - 1)));
  }
  return s;
}

namespace {

const RawPaper& find_paper(const RawCorpus& c, const std::string& id) {
  for (const auto& p : c.papers) {
    if (p.id == id) return p;
  }
  throw std::out_of_range("oracle: unknown paper " + id);
}

bool eligible(const std::string& doc_type) {
  return doc_type == "article" || doc_type == "note" || doc_type == "review";
}

bool in_window(const RawCorpus& c, const std::string& citing) {
  return find_paper(c, citing).year <= c.census_year;
}

}  // namespace

std::size_t times_cited(const RawCorpus& c, const std::string& id) {
  std::set<std::string> citers;
  for (const auto& [citing, cited] : c.edges) {
    if (cited == id && in_window(c, citing)) citers.insert(citing);
  }
  return citers.size();
}

std::size_t second_gen(const RawCorpus& c, const std::string& id) {
  std::set<std::string> citers;
  for (const auto& [citing, cited] : c.edges) {
    if (cited == id && in_window(c, citing)) citers.insert(citing);
  }
  std::size_t total = 0;
  for (const auto& q : citers) total += times_cited(c, q);
  return total;
}

std::optional<double> journal_ae(const RawCorpus& c, const std::string& id) {
  const auto& p = find_paper(c, id);
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& q : c.papers) {
    if (q.journal == p.journal && q.year == p.year && q.doc_type == p.doc_type) {
      sum += static_cast<double>(times_cited(c, q.id));
      ++n;
    }
  }
  if (n == 0 || sum == 0.0) return std::nullopt;
  return static_cast<double>(times_cited(c, id)) / (sum / static_cast<double>(n));
}

std::optional<double> category_ae(const RawCorpus& c, const std::string& id) {
  const auto& p = find_paper(c, id);
  double expected_sum = 0.0;
  std::size_t defined = 0;
  for (const auto& cat : p.categories) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& q : c.papers) {
      if (q.year != p.year || q.doc_type != p.doc_type) continue;
      if (std::find(q.categories.begin(), q.categories.end(), cat) == q.categories.end()) continue;
      sum += static_cast<double>(times_cited(c, q.id));
      ++n;
    }
    if (n > 0) {
      expected_sum += sum / static_cast<double>(n);
      ++defined;
    }
  }
  if (defined == 0) return std::nullopt;
  double mean_expected = expected_sum / static_cast<double>(defined);
  if (mean_expected == 0.0) return std::nullopt;
  return static_cast<double>(times_cited(c, id)) / mean_expected;
}

std::optional<double> percentile(const RawCorpus& c, const std::string& id) {
  const auto& p = find_paper(c, id);
  if (!eligible(p.doc_type)) return std::nullopt;
  std::size_t own = times_cited(c, id);
  std::optional<double> best;
  for (const auto& cat : p.categories) {
    std::size_t n = 0, at_or_above = 0;
    for (const auto& q : c.papers) {
      if (q.year != p.year || !eligible(q.doc_type)) continue;
      if (std::find(q.categories.begin(), q.categories.end(), cat) == q.categories.end()) continue;
      ++n;
      if (times_cited(c, q.id) >= own) ++at_or_above;
    }
    if (n == 0) continue;
    double pct = 100.0 * static_cast<double>(at_or_above) / static_cast<double>(n);
    if (!best || pct < *best) best = pct;
  }
  return best;
}

std::optional<double> jif(const RawCorpus& c, const std::string& journal, int jcr_year) {
  std::size_t items = 0, citations = 0;
  for (const auto& p : c.papers) {
    if (p.journal != journal) continue;
    if (p.year != jcr_year - 1 && p.year != jcr_year - 2) continue;
    ++items;
    std::set<std::string> citers;
    for (const auto& [citing, cited] : c.edges) {
      if (cited == p.id && in_window(c, citing)) citers.insert(citing);
    }
    for (const auto& q : citers) {
      if (find_paper(c, q).year == jcr_year) ++citations;
    }
  }
  if (items == 0) return std::nullopt;
  return static_cast<double>(citations) / static_cast<double>(items);
}

int ffa(std::vector<int> scores) {
  std::sort(scores.begin(), scores.end(), std::greater<int>());
  int total = scores[0];
  for (std::size_t i = 1; i < scores.size(); ++i) {
    total += scores[i] == 6 ? 1 : scores[i] == 8 ? 2 : 3;
  }
  return total;
}

std::vector<std::optional<double>> metric_series(const RawCorpus& c,
                                                 const std::vector<std::string>& papers,
                                                 std::size_t metric_index, int jcr_year) {
  std::vector<std::optional<double>> out;
  for (const auto& id : papers) {
    switch (metric_index) {
      case 0:
        out.push_back(static_cast<double>(times_cited(c, id)));
        break;
      case 1:
        out.push_back(static_cast<double>(second_gen(c, id)));
        break;
      case 2: {
        auto tc = times_cited(c, id);
        if (tc == 0) out.push_back(std::nullopt);
        else out.push_back(static_cast<double>(second_gen(c, id)) / static_cast<double>(tc));
        break;
      }
      case 3:
        out.push_back(journal_ae(c, id));
        break;
      case 4:
        out.push_back(category_ae(c, id));
        break;
      case 5: {
        auto pct = percentile(c, id);
        if (pct) out.push_back(100.0 - *pct);
        else out.push_back(std::nullopt);
        break;
      }
      case 6:
        out.push_back(jif(c, find_paper(c, id).journal, jcr_year));
        break;
      default:
        throw std::out_of_range("oracle: metric index");
    }
  }
  return out;
}

Corr correlate(const std::vector<std::optional<double>>& metric,
               const std::vector<double>& ffa_values, double level) {
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < metric.size(); ++i) {
    if (metric[i]) {
      xs.push_back(*metric[i]);
      ys.push_back(ffa_values[i]);
    }
  }
  Corr corr;
  corr.n = xs.size();
  corr.r_s = spearman_midrank(xs, ys);
  corr.p = spearman_p(corr.r_s, corr.n);
  auto [lo, hi] = fisher_ci(corr.r_s, corr.n, level);
  corr.ci_low = lo;
  corr.ci_high = hi;
  return corr;
}

}  // namespace oracle
