#pragma once

#include <iosfwd>
#include <string>

#include "bibval/corpus.hpp"
#include "bibval/validation.hpp"

namespace bibval {

/// Fixed-decimal formatting used in reports (r_s 3 decimals, p 4, CI 3).
std::string format_fixed(double value, int decimals);

/// Structured JSON report (schema_version 1) mirroring ValidationReport.
std::string report_to_json(const ValidationReport& report);

/// Plot data with columns metric,n,r_s,ci_low,ci_high,p,significant,effect.
void write_plot_csv(std::ostream& out, const ValidationReport& report);

/// One row per paper: paper_id plus the seven metrics, empty cell = missing.
void write_indicator_table(std::ostream& out, const Corpus& c, int jcr_year);

/// One row per rated paper: paper_id, ffa, n_ratings.
void write_ffa_table(std::ostream& out, const Corpus& c);

}  // namespace bibval
