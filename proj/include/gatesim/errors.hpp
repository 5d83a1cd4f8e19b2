#pragma once

#include <stdexcept>
#include <string>

namespace gatesim {

// Base class for everything this library throws on bad input. The CLI maps
// these to exit code 1 (validation), tolerance failures to 2, I/O to 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input text (CSV rows, headers). Messages carry line numbers.
class ParseError : public Error {
public:
    using Error::Error;
};

// A value or configuration violates a documented invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Events or commands presented out of timestamp order.
class SequencingError : public Error {
public:
    using Error::Error;
};

// Timestamp lookup outside the covered interval.
class RangeError : public Error {
public:
    using Error::Error;
};

// Argument outside the mathematical domain of a distribution function.
class DomainError : public Error {
public:
    using Error::Error;
};

// Participants that cannot be matched across conditions.
class PairingError : public Error {
public:
    using Error::Error;
};

// Fewer data points than the statistic requires.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

// Bus transaction does not fit inside the sampling period.
class ScheduleInfeasibleError : public Error {
public:
    using Error::Error;
};

// Filesystem failures (missing input, unwritable output).
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace gatesim
