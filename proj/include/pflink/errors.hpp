#ifndef PFLINK_ERRORS_HPP
#define PFLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pflink {

/// Problem with user-supplied input (bad slot list, undefined residue,
/// precondition violation reachable from the CLI). Maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource ceiling was exceeded. Maps to exit code 3.
class CeilingError : public std::runtime_error {
public:
    explicit CeilingError(const std::string& what) : std::runtime_error(what) {}
};

/// Syntax error in an expression, with the byte offset of the failure.
class ParseError : public UsageError {
public:
    ParseError(const std::string& what, std::size_t pos)
        : UsageError(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

} // namespace pflink

#endif
