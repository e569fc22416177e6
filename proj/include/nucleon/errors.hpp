#pragma once

#include <stdexcept>
#include <string>

namespace nucleon {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input data: wrong table shape, out-of-range entry, bad element
/// for a descriptor. Distinct from an axiom failure, which is reported
/// through a ValidationReport instead of thrown.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// The set {z : b.z <= c} has no maximum for some pair, so no residuum exists.
class NotResiduatedError : public Error {
public:
    NotResiduatedError(int b, int c, const std::string& what)
        : Error(what), b(b), c(c) {}
    int b;
    int c;
};

/// An exhaustive enumeration was refused because the input exceeds a cap.
class SizeCapError : public Error {
public:
    using Error::Error;
};

/// Text input (term, descriptor, element) failed to parse.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

/// Term evaluation failed (unbound variable).
class EvalError : public Error {
public:
    using Error::Error;
};

/// A generated-subalgebra request falls outside the supported hypothesis
/// (two generators in one component, generator in the first component, or a
/// finite-order non-idempotent generator).
class UnsupportedGeneratorError : public Error {
public:
    using Error::Error;
};

/// A finite materialization was requested for a descriptor with an infinite
/// component.
class NotFiniteError : public Error {
public:
    using Error::Error;
};

} // namespace nucleon
