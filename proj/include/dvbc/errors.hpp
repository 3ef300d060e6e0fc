#ifndef DVBC_ERRORS_HPP
#define DVBC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dvbc {

// Malformed input text (edge lists, generator specs, config values).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Structurally invalid graph (self-loop, duplicate edge, non-positive
// weight, disconnected).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checked 64-bit path-count arithmetic would wrap.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A measurement has no defined value (e.g. relative error against an
// all-zero reference vector).
class MetricUndefinedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A simulation hit its phase cap without reaching quiescence.
class NotConvergedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dvbc

#endif
