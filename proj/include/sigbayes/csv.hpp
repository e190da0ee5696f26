#pragma once

// Minimal strict CSV reading shared by the ingestion paths. No quoting or
// embedded commas; blank lines are skipped; the header must match the
// expected schema exactly.

#include <istream>
#include <string>
#include <vector>

namespace sigbayes::csv {

struct Row {
    std::vector<std::string> fields;
    std::size_t line; // 1-based line number in the source stream
};

// Splits on commas and trims surrounding whitespace from each field.
std::vector<std::string> split_fields(const std::string& line);

// Reads the header (first non-blank line), validates it against `expected`
// (throws parse_error naming the offending column otherwise), then returns
// all non-blank data rows with their line numbers.
std::vector<Row> read_table(std::istream& in, const std::vector<std::string>& expected);

} // namespace sigbayes::csv
