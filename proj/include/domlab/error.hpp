#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a byte offset for graph6 and a
/// 1-based line number for DIMACS.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A vertex index, order or size outside the supported range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An operation was called on input outside its stated domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A configured work cap (order, weight, variable count) was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A structural statement that must hold for every graph failed. Seeing
/// this means one of the solvers or constructions is wrong.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

} // namespace domlab
