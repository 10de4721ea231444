#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace perfectrep {

// Every library failure carries a stable machine-readable code; the CLI
// copies it into the output envelope verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    std::string_view code() const noexcept { return code_; }

private:
    std::string code_;
};

// Argument outside the mathematical domain of an operation (p < 2, n = 0,
// a non-Mersenne exponent, mismatched subset owner).
class DomainError : public Error {
public:
    using Error::Error;
};

// Target m outside [1, n].
class RangeError : public Error {
public:
    using Error::Error;
};

// Input is valid but exceeds a configured resource ceiling.
class CapabilityError : public Error {
public:
    using Error::Error;
};

}  // namespace perfectrep
