#pragma once

#include <stdexcept>
#include <string>

namespace lct {

/// Base class for recoverable errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input document or literal.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A table value (or a reconstructed table value) would be negative.
class NegativeEntry : public Error {
public:
    using Error::Error;
};

/// The declared tail of an explicit window does not extend the window edge.
class TailInconsistent : public Error {
public:
    using Error::Error;
};

/// Checked table subtraction would produce a negative entry.
class WouldGoNegative : public Error {
public:
    using Error::Error;
};

/// A column does not satisfy the growth conditions required for a
/// finite-length decomposition.
class NotStarShaped : public Error {
public:
    using Error::Error;
};

/// The subtrahend passed to subtract_admissible violates the shape
/// hypotheses (support window, cap, strict growth).
class HypothesesViolated : public Error {
public:
    using Error::Error;
};

/// A monomial ideal spec with no pure power of x or of y.
class NotPrimary : public Error {
public:
    using Error::Error;
};

/// An extremal-module label outside the valid parameter range.
class InvalidLabel : public Error {
public:
    using Error::Error;
};

/// A module spec document with invalid fields.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// The input point violates the defining inequalities of the cone.
class NotInCone : public Error {
public:
    using Error::Error;
};

}  // namespace lct
