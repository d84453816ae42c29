#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexidim {

// Base for every error raised by the library. The CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text, out-of-range indices, or a violated precondition.
class InputError : public Error {
public:
    using Error::Error;
};

// Parse failure with the byte offset where it was detected.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// An exact search was refused because the input exceeds a configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// A closed-form query outside the formula's validity range.
class NotApplicable : public Error {
public:
    using Error::Error;
};

// A structural identity the code relies on was observed to fail.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace lexidim
