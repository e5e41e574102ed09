#include "bibval/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "bibval/csv.hpp"
#include "bibval/ratings.hpp"

namespace bibval {

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

namespace {

std::string format_general(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

nlohmann::ordered_json summary_to_json(const VariableSummary& v) {
  nlohmann::ordered_json j;
  j["name"] = v.name;
  j["n"] = v.stats.n;
  j["mean"] = format_fixed(v.stats.mean, 4);
  j["sd"] = v.stats.sd ? nlohmann::ordered_json(format_fixed(*v.stats.sd, 4))
                       : nlohmann::ordered_json(nullptr);
  j["min"] = format_fixed(v.stats.min, 4);
  j["max"] = format_fixed(v.stats.max, 4);
  if (v.normality) {
    nlohmann::ordered_json n;
    n["skew_z"] = format_fixed(v.normality->skew_z, 4);
    n["kurt_z"] = format_fixed(v.normality->kurt_z, 4);
    n["omnibus_k2"] = format_fixed(v.normality->omnibus_k2, 4);
    n["p_skew"] = format_fixed(v.normality->p_skew, 4);
    n["p_kurt"] = format_fixed(v.normality->p_kurt, 4);
    n["p_omnibus"] = format_fixed(v.normality->p_omnibus, 4);
    j["normality"] = n;
  } else {
    j["normality"] = nullptr;
  }
  return j;
}

nlohmann::ordered_json correlation_to_json(const stats::CorrelationResult& c) {
  nlohmann::ordered_json j;
  j["metric"] = c.metric_name;
  j["n"] = c.n;
  j["r_s"] = format_fixed(c.r_s, 3);
  j["r_squared"] = format_fixed(c.r_squared, 3);
  j["ci_low"] = format_fixed(c.ci_low, 3);
  j["ci_high"] = format_fixed(c.ci_high, 3);
  j["p_value"] = format_fixed(c.p_value, 4);
  j["significant"] = c.significant;
  j["effect"] = stats::to_string(c.effect);
  return j;
}

}  // namespace

std::string report_to_json(const ValidationReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["alpha"] = format_general(report.alpha);
  j["alpha_adjusted"] = format_fixed(report.alpha_adjusted, 3);
  j["confidence_level"] = format_general(report.confidence_level);
  j["census_year"] = report.census_year;
  j["jcr_year"] = report.jcr_year;
  char checksum[32];
  std::snprintf(checksum, sizeof(checksum), "%016llx",
                static_cast<unsigned long long>(report.corpus_checksum));
  j["corpus_checksum"] = checksum;
  j["summary"] = nlohmann::ordered_json::array();
  for (const auto& v : report.variables) j["summary"].push_back(summary_to_json(v));
  j["correlations"] = nlohmann::ordered_json::array();
  for (const auto& c : report.correlations) j["correlations"].push_back(correlation_to_json(c));
  return j.dump(2) + "\n";
}

void write_plot_csv(std::ostream& out, const ValidationReport& report) {
  out << "metric,n,r_s,ci_low,ci_high,p,significant,effect\n";
  for (const auto& c : report.correlations) {
    csv::write_row(out, {c.metric_name, std::to_string(c.n), format_fixed(c.r_s, 3),
                         format_fixed(c.ci_low, 3), format_fixed(c.ci_high, 3),
                         format_fixed(c.p_value, 4), c.significant ? "true" : "false",
                         stats::to_string(c.effect)});
  }
}

void write_indicator_table(std::ostream& out, const Corpus& c, int jcr_year) {
  BaselineTable baselines(c);
  out << "paper_id,times_cited,second_gen,second_gen_per_citing,journal_ae,category_ae,"
         "reversed_percentile,jif\n";
  auto cell = [](const std::optional<double>& v) {
    return v ? format_general(*v) : std::string();
  };
  for (const auto& [id, p] : c.papers()) {
    IndicatorVector v = baselines.indicator_vector(id, jcr_year);
    csv::write_row(out, {id, std::to_string(v.times_cited), std::to_string(v.second_gen),
                         cell(v.second_gen_per_citing), cell(v.journal_ae),
                         cell(v.category_ae), cell(v.reversed_percentile), cell(v.jif)});
  }
}

void write_ffa_table(std::ostream& out, const Corpus& c) {
  out << "paper_id,ffa,n_ratings\n";
  for (const auto& s : ffa_table(c)) {
    csv::write_row(out, {s.paper_id, std::to_string(s.ffa), std::to_string(s.n_ratings)});
  }
}

}  // namespace bibval
