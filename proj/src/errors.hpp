#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ivfg {

struct Error : std::runtime_error {
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed document text. Positions are 1-based.
struct ParseError : Error {
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                message),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

// A domain invariant does not hold; `violations` lists every failure found.
struct ValidationError : Error {
    explicit ValidationError(const std::string& message)
        : Error(message), violations{message} {}

    ValidationError(const std::string& summary, std::vector<std::string> details)
        : Error(join(summary, details)), violations(std::move(details)) {}

    std::vector<std::string> violations;

private:
    static std::string join(const std::string& summary, const std::vector<std::string>& details) {
        std::string out = summary;
        for (const auto& d : details)
            out += "\n  " + d;
        return out;
    }
};

// The complement of the graph is not an interval-valued fuzzy graph.
struct ComplementError : Error {
    ComplementError(const std::string& summary, std::vector<std::string> pairs)
        : Error(join(summary, pairs)), offending_pairs(std::move(pairs)) {}

    std::vector<std::string> offending_pairs;

private:
    static std::string join(const std::string& summary, const std::vector<std::string>& pairs) {
        std::string out = summary;
        for (const auto& p : pairs)
            out += "\n  " + p;
        return out;
    }
};

// A caller-supplied value is outside the operation's domain.
struct ArgumentError : Error {
    using Error::Error;
};

// An enumeration guard was exceeded.
struct LimitError : Error {
    using Error::Error;
};

} // namespace ivfg
