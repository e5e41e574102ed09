#include "test_helpers.hpp"

namespace testing {

// Mirrors tests/data/f1/*.csv entry by entry; kept by hand so the oracle
// side never goes through the library loader.
oracle::RawCorpus f1_raw() {
  oracle::RawCorpus c;
  c.census_year = 2010;
  c.papers = {
      {"P01", "J1", 2006, "article", {"cell biology"}},
      {"P02", "J1", 2006, "article", {"cell biology"}},
      {"P03", "J1", 2007, "article", {"cell biology", "immunology"}},
      {"P04", "J1", 2007, "review", {"immunology"}},
      {"P05", "J2", 2006, "article", {"immunology"}},
      {"P06", "J2", 2007, "article", {"cell biology"}},
      {"P07", "J2", 2008, "article", {"cell biology"}},
      {"P08", "J2", 2008, "article", {"immunology"}},
      {"P09", "J1", 2008, "article", {"cell biology", "immunology"}},
      {"P10", "J1", 2008, "note", {"cell biology"}},
      {"P11", "J2", 2008, "other", {"immunology"}},
      {"P12", "J2", 2008, "article", {"cell biology"}},
      {"P13", "J1", 2008, "article", {"immunology"}},
      {"P14", "J2", 2008, "review", {"cell biology", "immunology"}},
  };
  c.edges = {
      {"P07", "P01"}, {"P08", "P01"}, {"P09", "P01"}, {"P12", "P01"}, {"P02", "P01"},
      {"P07", "P02"}, {"P09", "P02"}, {"P08", "P03"}, {"P10", "P03"}, {"P13", "P03"},
      {"P09", "P04"}, {"P14", "P05"}, {"P07", "P05"}, {"P12", "P06"}, {"P09", "P07"},
      {"P13", "P08"}, {"P14", "P08"}, {"P09", "P09"},
  };
  return c;
}

}  // namespace testing

namespace testing {

std::map<std::string, std::vector<int>> f1_ratings() {
  return {
      {"P01", {10, 8, 6}}, {"P02", {8, 8}},   {"P03", {6}},       {"P05", {10}},
      {"P06", {10, 10}},   {"P07", {6, 6}},   {"P09", {8}},       {"P10", {10, 6}},
      {"P12", {8, 6, 6}},  {"P13", {6}},
  };
}

}  // namespace testing
