#include "fdh/csv.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fdh {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void parse_error(std::size_t line, std::size_t column, const std::string& why) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + why);
}

enum class Role { kInput, kOutput };

}  // namespace

ExactDataset parse_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) {
      header = split(line);
      break;
    }
  }
  if (header.empty()) throw Error(ErrorCode::kEmptyDataset, "no header row");

  RawTable<Rational> raw;
  std::vector<Role> roles;
  for (std::size_t c = 1; c < header.size(); ++c) {
    const std::string& h = header[c];
    if (h.rfind("in_", 0) == 0 && h.size() > 3) {
      roles.push_back(Role::kInput);
      raw.input_labels.push_back(h.substr(3));
    } else if (h.rfind("out_", 0) == 0 && h.size() > 4) {
      roles.push_back(Role::kOutput);
      raw.output_labels.push_back(h.substr(4));
    } else {
      parse_error(line_no, c + 1, "column '" + h + "' must start with in_ or out_");
    }
  }
  if (raw.input_labels.empty()) throw Error(ErrorCode::kNoInputColumns, "header has no in_ column");
  if (raw.output_labels.empty()) {
    throw Error(ErrorCode::kNoOutputColumns, "header has no out_ column");
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorCode::kRaggedRows, "line " + std::to_string(line_no) + " has " +
                                              std::to_string(fields.size()) + " fields, header has " +
                                              std::to_string(header.size()));
    }
    if (fields[0].empty()) parse_error(line_no, 1, "empty unit name");
    raw.names.push_back(fields[0]);
    std::vector<Rational> x;
    std::vector<Rational> y;
    for (std::size_t c = 1; c < fields.size(); ++c) {
      Rational value;
      try {
        value = parse_rational(fields[c]);
      } catch (const Error& e) {
        parse_error(line_no, c + 1, e.what());
      }
      (roles[c - 1] == Role::kInput ? x : y).push_back(std::move(value));
    }
    raw.inputs.push_back(std::move(x));
    raw.outputs.push_back(std::move(y));
  }
  return validate_dataset(std::move(raw));
}

ExactDataset parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_csv(in);
}

ExactDataset read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path.string() + "'");
  return parse_csv(in);
}

void write_csv(const ExactDataset& d, std::ostream& out) {
  out << "dmu";
  for (const auto& label : d.input_labels()) out << ",in_" << label;
  for (const auto& label : d.output_labels()) out << ",out_" << label;
  out << "\n";
  for (std::size_t j = 0; j < d.size(); ++j) {
    out << d.name(j);
    for (const auto& v : d.inputs_of(j)) out << "," << to_string(v);
    for (const auto& v : d.outputs_of(j)) out << "," << to_string(v);
    out << "\n";
  }
}

}  // namespace fdh
