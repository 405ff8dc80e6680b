// CSV data ingestion.
//
// Header: first column names the units; columns prefixed `in_` are inputs,
// `out_` are outputs, in file order. Values may be decimals or fractions
// such as 13/4; they are read exactly.
#ifndef FDH_CSV_HPP_
#define FDH_CSV_HPP_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string_view>

#include "fdh/model.hpp"

namespace fdh {

// Errors: kParseError (with line and column), kNoInputColumns,
// kNoOutputColumns, and every validate_dataset error.
ExactDataset parse_csv(std::istream& in);
ExactDataset parse_csv(std::string_view text);
// Adds kIoError when the file cannot be opened.
ExactDataset read_csv(const std::filesystem::path& path);

// Writes the same format with exact fraction literals.
void write_csv(const ExactDataset& d, std::ostream& out);

}  // namespace fdh

#endif  // FDH_CSV_HPP_
