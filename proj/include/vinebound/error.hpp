#ifndef VINEBOUND_ERROR_HPP
#define VINEBOUND_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vinebound {

// Base of everything the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph file. line() is 1-based; 0 means "end of input".
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A vertex sequence is not a path/cycle of the host graph.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Caller violated an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A node, state or item cap was hit before the computation finished.
class ResourceLimitError : public Error {
public:
    ResourceLimitError(const std::string& what, std::size_t partial_count)
        : Error(what), partial_count_(partial_count) {}
    std::size_t partial_count() const noexcept { return partial_count_; }

private:
    std::size_t partial_count_;
};

// Something that a theorem or a construction guarantees did not happen.
// Always indicates a bug in this library.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace vinebound

#endif // VINEBOUND_ERROR_HPP
