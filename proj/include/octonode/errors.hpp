#ifndef OCTONODE_ERRORS_HPP
#define OCTONODE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace octonode {

// Exit-code contract shared by the CLI and the error hierarchy:
//   0 = all certifications pass, 1 = certification failed, 2 = input error,
//   3 = mathematical precondition violated, 4 = resource budget exceeded.
enum class ExitCode : int {
    ok = 0,
    cert_failed = 1,
    input_error = 2,
    precondition = 3,
    resource = 4,
};

// Malformed text input (polynomial grammar, ideal/spec files, CLI values).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + msg),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A documented mathematical precondition does not hold (wrong field, ideal
// not zero-dimensional where required, degenerate input, ...).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured budget (S-pair count, degree bound, table size) was exceeded.
// Never a silent truncation: computations either finish exactly or throw this.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace octonode

#endif
