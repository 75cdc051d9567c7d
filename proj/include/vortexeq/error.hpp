#ifndef VORTEXEQ_ERROR_HPP
#define VORTEXEQ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace vortexeq
{

/// Base of every error raised by the library.
struct Error : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// Division by zero, zero denominators, coincident charge positions.
struct DomainError : Error
{
    using Error::Error;
};

/// Addition of half-power values with different parity.
struct ParityError : Error
{
    using Error::Error;
};

/// A result that should have been a (half-power) polynomial carries a
/// negative or fractional residual power of z.
struct NotPolynomialError : Error
{
    using Error::Error;
};

/// A primitive has an unavoidable logarithmic part.
struct NotRationalError : Error
{
    using Error::Error;
};

/// An Abel identity has no polynomial solution for the requested member.
struct InconsistentError : Error
{
    using Error::Error;
};

/// Root finding failed to converge.
struct NumericError : Error
{
    using Error::Error;
};

/// Malformed text in the exact encodings or in CLI parameters.
struct ParseError : Error
{
    using Error::Error;
};

/// A file could not be read or written.
struct IoError : Error
{
    using Error::Error;
};

} // namespace vortexeq

#endif
