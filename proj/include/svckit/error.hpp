#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svckit {

/// An argument is outside the domain of the operation (bad vertex id,
/// missing edge, s == t, invalid family parameters).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed input file. Carries the 1-based line number when known (0 otherwise).
class ParseError : public InputError {
  public:
    ParseError(const std::string &what, std::size_t line = 0)
        : InputError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// The graph does not satisfy a structural precondition (typically: not
/// strongly connected, or too few vertices).
class PreconditionError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace svckit
