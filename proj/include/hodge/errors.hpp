#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is well-formed but outside what the library computes.
class Unsupported : public Error {
public:
    using Error::Error;
};

/// A table carries odd-degree classes; Koszul signs are not modeled.
class OddCohomologyUnsupported : public Unsupported {
public:
    using Unsupported::Unsupported;
};

class NegativeIndex : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

/// An averaged trace did not divide exactly, or went negative.
class IntegralityViolation : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same number disagreed.
class MismatchReport : public Error {
public:
    MismatchReport(int first_bad_n, const std::string& what)
        : Error(what), first_bad_n_(first_bad_n) {}
    int first_bad_n() const noexcept { return first_bad_n_; }

private:
    int first_bad_n_;
};

/// Malformed surface spec file or command line.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace hodge
