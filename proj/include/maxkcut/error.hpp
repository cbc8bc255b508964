#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mkc {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised while reading an edge-list or penalty document. `line()` is 1-based,
/// 0 when the problem is not tied to a particular line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An instance exceeds an enumeration cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace mkc
