#include "sigbayes/csv.hpp"

#include "sigbayes/errors.hpp"

namespace sigbayes::csv {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

std::vector<Row> read_table(std::istream& in, const std::vector<std::string>& expected) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<Row> rows;

    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_fields(line);
        if (!header_seen) {
            if (fields.size() != expected.size())
                throw parse_error("header has " + std::to_string(fields.size()) +
                                      " columns, expected " + std::to_string(expected.size()),
                                  line_no);
            for (std::size_t i = 0; i < expected.size(); ++i)
                if (fields[i] != expected[i])
                    throw parse_error("unknown header column '" + fields[i] +
                                          "' (expected '" + expected[i] + "')",
                                      line_no);
            header_seen = true;
            continue;
        }
        rows.push_back({std::move(fields), line_no});
    }
    if (!header_seen) throw parse_error("input has no header row");
    return rows;
}

} // namespace sigbayes::csv
