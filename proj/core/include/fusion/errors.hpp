#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

// Base of all library errors. The CLI maps each subclass to an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: unknown affine type, level < 1, rank above the bound.
class UsageError : public Error {
public:
    using Error::Error;
};

class RankBoundError : public UsageError {
public:
    using UsageError::UsageError;
};

// A theorem-level invariant was violated (non-integral fusion coefficient,
// singular character matrix, negative untwisted multiplicity).
class IntegrityError : public Error {
public:
    using Error::Error;
};

// A folding certificate could not be reconstructed or verified.
class CertificateError : public Error {
public:
    using Error::Error;
};

// Operation is undefined for the given input (mismatched sides, vanishing
// Weyl denominator, no symmetric identification).
class DomainError : public Error {
public:
    using Error::Error;
};

class RegularityError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace fusion
