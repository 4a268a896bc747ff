#pragma once

#include <stdexcept>
#include <string>

namespace fseg {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
    EmptyInput() : Error("empty input: need at least one sequence") {}
    using Error::Error;
};

struct UnequalLengths : Error {
    using Error::Error;
};

struct AlphabetTooLarge : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

struct SymbolOutOfRange : Error {
    using Error::Error;
};

struct InvalidL : Error {
    using Error::Error;
};

struct SourceExhausted : Error {
    using Error::Error;
};

// Raised when n < L: no segmentation with minimum segment length L exists.
struct InfeasibleLength : Error {
    using Error::Error;
};

struct CorruptBacktrack : Error {
    using Error::Error;
};

struct SegmentationMismatch : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct BadMagic : Error {
    using Error::Error;
};

struct Truncated : Error {
    using Error::Error;
};

} // namespace fseg
