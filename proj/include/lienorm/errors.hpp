#pragma once

#include <stdexcept>
#include <string>

namespace lienorm {

// Bad arguments or misuse of an API contract (frame mismatch, missing data).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Malformed textual input (scalars, polynomials, model files).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// An internal consistency check failed; indicates a bug or inconsistent input
// (for example a series that is not divisible by the expected power).
class IntegrityError : public std::logic_error {
public:
    explicit IntegrityError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace lienorm
