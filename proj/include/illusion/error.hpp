#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace illusion {

enum class ErrorKind {
    domain,
    palette,
    fraction,
    plan,
    parse,
    capacity,
    precondition,
    witness,
    generation,
    construction,
    io,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; the kind drives CLI exit reporting.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace illusion
