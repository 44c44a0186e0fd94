#pragma once

#include <stdexcept>
#include <string>

namespace ferrers {

// Base of every error thrown by the library. Callers that only need to
// report a message can catch this one.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed partition input (not weakly decreasing, bad text form).
class InvalidPartition : public Error {
public:
    using Error::Error;
};

// Operation needs a nonempty partition.
class EmptyPartition : public Error {
public:
    using Error::Error;
};

// A grid does not contain the removed diagram, or an inequality references
// such a grid.
class OutOfDomain : public Error {
public:
    using Error::Error;
};

// Exhaustive path listing refused because the unrestricted count is too big.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// Input does not satisfy a documented precondition (positivity,
// log-concavity, ...).
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Matrix with no rows/columns, ragged rows, or a negative entry.
class InvalidMatrix : public Error {
public:
    using Error::Error;
};

} // namespace ferrers
