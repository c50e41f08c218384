#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace orderdraw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The closure of a generating relation contains a cycle a < ... < a.
class CycleError : public Error {
public:
    explicit CycleError(std::vector<std::string> witness);

    /// Labels along the cycle; the first label is repeated implicitly at the end.
    const std::vector<std::string> &witness() const noexcept { return witness_; }

private:
    std::vector<std::string> witness_;
};

class UnknownLabel : public Error {
public:
    explicit UnknownLabel(const std::string &label)
        : Error("unknown element label '" + label + "'") {}
};

class GroundMismatch : public Error {
public:
    GroundMismatch() : Error("relations are defined on different ground sets") {}
};

class InvalidOrder : public Error {
public:
    using Error::Error;
};

class NotIncomparable : public Error {
public:
    using Error::Error;
};

class NotLinear : public Error {
public:
    using Error::Error;
};

class EdgeMismatch : public Error {
public:
    using Error::Error;
};

/// An external SAT solver crashed, timed out or produced unreadable output.
/// Distinct from an UNSAT verdict.
class BackendFailure : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string reason);

    std::size_t line() const noexcept { return line_; }
    const std::string &reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

/// An extension step produced a relation that is not an order.
class OrderViolation : public Error {
public:
    using Error::Error;
};

/// Collinearity could not be removed by bounded perturbation.
class Unresolvable : public Error {
public:
    using Error::Error;
};

} // namespace orderdraw
