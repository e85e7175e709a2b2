#pragma once

#include <stdexcept>
#include <string>

namespace hypermap {

// Base class for every error raised by the census engines. All of them
// indicate either a caller bug (NotFilled) or an internal inconsistency
// that must never be ignored.
class CensusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InexactDivision : public CensusError {
public:
    using CensusError::CensusError;
};

class NegativeCoefficient : public CensusError {
public:
    using CensusError::CensusError;
};

// A lookup asked for a (genus, darts) pair outside what was computed.
class NotFilled : public CensusError {
public:
    using CensusError::CensusError;
};

class NonIntegerCoefficient : public CensusError {
public:
    using CensusError::CensusError;
};

class NoConvergence : public CensusError {
public:
    using CensusError::CensusError;
};

// Malformed text input (fixtures, caches). Carries "file:line: message".
class ParseError : public CensusError {
public:
    using CensusError::CensusError;
};

} // namespace hypermap
