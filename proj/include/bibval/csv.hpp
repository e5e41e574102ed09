#pragma once

#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bibval::csv {

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
  std::size_t line_number;
};

/// Minimal RFC-4180-style reader: quoted fields, embedded commas and quotes.
/// Rows are returned without the header; access the header separately.
class Reader {
 public:
  explicit Reader(std::istream& in, std::string source_name = "<stream>");

  const std::vector<std::string>& header() const { return header_; }
  const std::string& source_name() const { return source_name_; }

  /// Reads the next record. Returns false at end of input.
  /// Blank lines are skipped. line() reports the 1-based physical line
  /// of the record just read.
  bool next(std::vector<std::string>& fields);
  std::size_t line() const { return line_; }

  /// Index of a required header column; throws ParseError if absent.
  std::size_t column(const std::string& name) const;

 private:
  std::istream& in_;
  std::string source_name_;
  std::vector<std::string> header_;
  std::size_t line_ = 0;
};

/// Quotes a field iff it contains a comma, quote, or newline.
std::string quote(const std::string& field);

void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace bibval::csv
