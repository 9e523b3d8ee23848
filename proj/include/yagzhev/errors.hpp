#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace yagzhev {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// coefficient / ring errors
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in Q(i)") {}
};
struct ArityMismatch : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct NotDivisible : Error {
    using Error::Error;
};
struct ZeroPolynomialInput : Error {
    using Error::Error;
};

// matrix errors
struct ShapeMismatch : Error {
    using Error::Error;
};
struct NotSquare : Error {
    using Error::Error;
};
struct DimensionTooLarge : Error {
    using Error::Error;
};

// map / pipeline errors
struct NotYagzhevForm : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};
struct NotQuartic : Error {
    using Error::Error;
};
struct ArityTooSmall : Error {
    using Error::Error;
};
struct PreconditionNotMet : Error {
    using Error::Error;
};
struct DegreeMismatch : Error {
    using Error::Error;
};

// parser errors
struct ParseError : Error {
    std::size_t position;
    std::string expected;
    ParseError(std::size_t pos, const std::string& what_expected)
        : Error("syntax error at position " + std::to_string(pos) + ": expected " + what_expected),
          position(pos),
          expected(what_expected) {}
};
struct ArityViolation : Error {
    using Error::Error;
};
struct NegativeExponent : Error {
    using Error::Error;
};

}  // namespace yagzhev
