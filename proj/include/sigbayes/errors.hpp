#pragma once

#include <stdexcept>
#include <string>

namespace sigbayes {

// Invalid argument or out-of-domain input. CLI maps this to exit code 1.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// A numeric routine failed to converge within its iteration budget.
// Never downgraded to a silent approximation. CLI maps this to exit code 2.
class numeric_failure : public std::runtime_error {
public:
    explicit numeric_failure(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data; carries a 1-based line number when known (0 = unknown).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace sigbayes
