#include "bibval/csv.hpp"

#include <algorithm>

namespace bibval::csv {

namespace {

// Parses one physical record starting at the current stream position.
// Returns false if the stream is exhausted before any character is seen.
bool read_record(std::istream& in, std::size_t& line, std::vector<std::string>& fields) {
  fields.clear();
  std::string field;
  bool in_quotes = false;
  bool saw_any = false;
  int c;
  ++line;
  while ((c = in.get()) != EOF) {
    saw_any = true;
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(static_cast<char>(c));
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c == '\r') {
      // swallow, handle CRLF
    } else {
      field.push_back(static_cast<char>(c));
    }
  }
  if (!saw_any) return false;
  fields.push_back(std::move(field));
  return true;
}

}  // namespace

Reader::Reader(std::istream& in, std::string source_name)
    : in_(in), source_name_(std::move(source_name)) {
  std::vector<std::string> fields;
  if (!read_record(in_, line_, fields) || fields.empty()) {
    throw ParseError(source_name_ + ": missing header row", 1);
  }
  header_ = std::move(fields);
}

bool Reader::next(std::vector<std::string>& fields) {
  for (;;) {
    if (!read_record(in_, line_, fields)) return false;
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    return true;
  }
}

std::size_t Reader::column(const std::string& name) const {
  auto it = std::find(header_.begin(), header_.end(), name);
  if (it == header_.end()) {
    throw ParseError(source_name_ + ": missing required column '" + name + "'", 1);
  }
  return static_cast<std::size_t>(it - header_.begin());
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out += "\"";
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(',');
    out << quote(fields[i]);
  }
  out.put('\n');
}

}  // namespace bibval::csv
