#pragma once

#include <stdexcept>
#include <string>

namespace rslab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An input object violates one of its type invariants (malformed curve,
/// non-finite matrix entry, bad file contents).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// An argument lies outside the domain of an operation (g < 2 for moduli
/// counts, non-positive Beta arguments, out-of-range degree).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A configuration the library recognizes but does not handle.
class UnsupportedError : public Error {
  public:
    using Error::Error;
};

/// Numerical failure: ill-conditioned normalization, singular integrand,
/// quadrature that does not converge, integer overflow in exact arithmetic.
class NumericError : public Error {
  public:
    using Error::Error;
};

class SingularIntegrandError : public NumericError {
  public:
    using NumericError::NumericError;
};

class NormalizationError : public NumericError {
  public:
    NormalizationError(const std::string& what, double condition)
        : NumericError(what), condition_(condition) {}

    double condition() const noexcept { return condition_; }

  private:
    double condition_;
};

} // namespace rslab
