#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qf {

// Error taxonomy mirrors the CLI exit codes: parse/usage problems,
// domain errors (bad operands), unsupported-for-field requests, and
// exceeded resource bounds (factoring, search, enumeration budgets).

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ParseError(const std::string& msg, std::size_t position = npos)
        : Error(msg), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public Error {
public:
    using Error::Error;
};

class BoundError : public Error {
public:
    using Error::Error;
};

}  // namespace qf
