#ifndef DISRANK_ERRORS_HPP
#define DISRANK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace disrank {

/// Raised by the APX/TGF/automaton parsers; carries the 1-based input line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A query named an argument (or automaton state/symbol) that does not exist.
class UnknownNameError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Walk enumeration would materialize more walks than the configured cap.
class CapExceededError : public std::runtime_error {
public:
    CapExceededError(std::size_t cap)
        : std::runtime_error("walk enumeration exceeds cap of " + std::to_string(cap) + " walks"),
          cap_(cap) {}

    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

}  // namespace disrank

#endif
