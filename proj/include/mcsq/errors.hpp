#pragma once

#include <stdexcept>
#include <string>

namespace mcsq {

/// Malformed matrix input. `line` is 1-based within the parsed stream.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// An exhaustive computation was refused because the instance exceeds the
/// configured bound and no force flag was given.
class LimitError : public std::runtime_error {
public:
    LimitError(const std::string& what, long bound)
        : std::runtime_error(what + " (bound: " + std::to_string(bound) + ")"), bound_(bound) {}
    long bound() const { return bound_; }

private:
    long bound_;
};

/// A verified minimal conflicting set did not match any known obstruction
/// signature; indicates a detector or classification bug.
class ClassifyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mcsq
