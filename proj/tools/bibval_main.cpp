#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bibval/corpus.hpp"
#include "bibval/report.hpp"
#include "bibval/synthgen.hpp"
#include "bibval/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

struct CorpusArgs {
  std::string papers;
  std::string citations;
  std::optional<std::string> ratings;
  int census_year = 0;
};

void add_corpus_flags(CLI::App* cmd, CorpusArgs& args, bool ratings_required) {
  cmd->add_option("--papers", args.papers, "papers CSV file")->required();
  cmd->add_option("--citations", args.citations, "citations CSV file")->required();
  auto* ratings = cmd->add_option_function<std::string>(
      "--ratings", [&args](const std::string& v) { args.ratings = v; }, "ratings CSV file");
  if (ratings_required) ratings->required();
  cmd->add_option("--census-year", args.census_year, "count citations up to this year")
      ->required();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bibval::IoError("cannot open output file '" + path.string() + "'");
  out << content;
  if (!out) throw bibval::IoError("failed writing '" + path.string() + "'");
}

std::filesystem::path prepare_out_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw bibval::IoError("cannot create output directory '" + dir + "'");
  return dir;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Citation-network indicators, FFa scoring and rank-correlation validation"};
  app.require_subcommand(1);

  // --- synth ---
  auto* synth = app.add_subcommand("synth", "generate a seeded synthetic corpus");
  bibval::synthgen::GenConfig gen;
  std::vector<std::string> category_specs;
  std::string synth_out = ".";
  synth->add_option("--seed", gen.seed, "generator seed (explicit for reproducibility)")
      ->required();
  synth->add_option("--n-papers", gen.n_papers, "number of papers")->required();
  synth->add_option("--n-journals", gen.n_journals, "number of journals")->default_val(10);
  synth->add_option("--category", category_specs,
                    "category regime as id=mean_rate (repeatable)")
      ->required();
  synth->add_option("--rating-fraction", gen.rating_fraction, "fraction of papers rated")
      ->default_val(0.1);
  synth->add_option("--planted-corr", gen.planted_rank_corr,
                    "target rank correlation between quality and FFa")
      ->default_val(0.9);
  synth->add_option("--min-year", gen.min_year, "earliest publication year")->required();
  synth->add_option("--max-year", gen.max_year, "latest publication year")->required();
  synth->add_option("--census-year", gen.census_year, "census year")->required();
  synth->add_option("--out", synth_out, "output directory")->required();

  // --- check ---
  auto* check = app.add_subcommand("check", "load a corpus and report invariant violations");
  CorpusArgs check_args;
  add_corpus_flags(check, check_args, false);

  // --- indicators ---
  auto* indicators = app.add_subcommand("indicators", "write the per-paper indicator table");
  CorpusArgs ind_args;
  int ind_jcr_year = 0;
  std::string ind_out = ".";
  add_corpus_flags(indicators, ind_args, false);
  indicators->add_option("--jcr-year", ind_jcr_year, "JCR year for the impact factor")
      ->required();
  indicators->add_option("--out", ind_out, "output directory")->required();

  // --- ffa ---
  auto* ffa_cmd = app.add_subcommand("ffa", "write the FFa table for rated papers");
  CorpusArgs ffa_args;
  std::string ffa_out = ".";
  add_corpus_flags(ffa_cmd, ffa_args, true);
  ffa_cmd->add_option("--out", ffa_out, "output directory")->required();

  // --- validate ---
  auto* validate = app.add_subcommand("validate", "run the full correlation study");
  CorpusArgs val_args;
  bibval::ValidationConfig val_cfg;
  std::string val_out = ".";
  add_corpus_flags(validate, val_args, true);
  validate->add_option("--jcr-year", val_cfg.jcr_year, "JCR year for the impact factor")
      ->required();
  validate->add_option("--alpha", val_cfg.alpha, "significance level before adjustment")
      ->default_val(0.05);
  validate->add_option("--confidence", val_cfg.confidence_level, "confidence level for CIs")
      ->default_val(0.95);
  validate->add_option("--out", val_out, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) {
      for (const auto& spec : category_specs) {
        auto eq = spec.find('=');
        if (eq == std::string::npos) {
          throw std::invalid_argument("category spec '" + spec + "' must be id=mean_rate");
        }
        gen.categories.push_back({spec.substr(0, eq), std::stod(spec.substr(eq + 1))});
      }
      bibval::synthgen::validate_config(gen);
      bibval::synthgen::write_corpus_files(gen, synth_out);
      std::cout << "wrote papers/citations/ratings/truth CSVs to " << synth_out << "\n";
      return kExitOk;
    }

    if (*check) {
      bibval::LoadSummary summary;
      auto corpus = bibval::load_corpus_files(check_args.papers, check_args.citations,
                                              check_args.ratings, check_args.census_year,
                                              &summary);
      auto violations = bibval::validate_corpus(corpus);
      std::cout << "papers: " << summary.papers_loaded << ", edges: " << summary.edges_loaded
                << " (" << summary.duplicate_edges << " duplicates dropped, "
                << summary.edges_outside_census << " outside census window), ratings: "
                << summary.ratings_loaded << "\n";
      for (const auto& v : violations) std::cout << "violation: " << v << "\n";
      return violations.empty() ? kExitOk : kExitDomain;
    }

    if (*indicators) {
      auto corpus = bibval::load_corpus_files(ind_args.papers, ind_args.citations,
                                              ind_args.ratings, ind_args.census_year);
      auto dir = prepare_out_dir(ind_out);
      std::ostringstream buf;
      bibval::write_indicator_table(buf, corpus, ind_jcr_year);
      write_file(dir / "indicators.csv", buf.str());
      std::cout << "wrote " << (dir / "indicators.csv").string() << "\n";
      return kExitOk;
    }

    if (*ffa_cmd) {
      auto corpus = bibval::load_corpus_files(ffa_args.papers, ffa_args.citations,
                                              ffa_args.ratings, ffa_args.census_year);
      auto dir = prepare_out_dir(ffa_out);
      std::ostringstream buf;
      bibval::write_ffa_table(buf, corpus);
      write_file(dir / "ffa.csv", buf.str());
      std::cout << "wrote " << (dir / "ffa.csv").string() << "\n";
      return kExitOk;
    }

    if (*validate) {
      auto corpus = bibval::load_corpus_files(val_args.papers, val_args.citations,
                                              val_args.ratings, val_args.census_year);
      auto report = bibval::run_validation(corpus, val_cfg);
      auto dir = prepare_out_dir(val_out);
      write_file(dir / "report.json", bibval::report_to_json(report));
      std::ostringstream buf;
      bibval::write_plot_csv(buf, report);
      write_file(dir / "plot_data.csv", buf.str());
      std::cout << "wrote " << (dir / "report.json").string() << " and "
                << (dir / "plot_data.csv").string() << "\n";
      return kExitOk;
    }
  } catch (const bibval::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}
