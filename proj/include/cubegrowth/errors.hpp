#pragma once

#include <stdexcept>
#include <string>

namespace cubegrowth {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input text could not be parsed. Carries the source file and line (0 when
/// the problem spans several lines, e.g. a bad gluing detected at closure).
struct ParseError : Error {
    ParseError(std::string file_, int line_, const std::string& msg)
        : Error(line_ > 0 ? file_ + ":" + std::to_string(line_) + ": " + msg
                          : file_ + ": " + msg),
          file(std::move(file_)),
          line(line_) {}
    std::string file;
    int line;
};

/// A documented precondition of an operation was violated.
struct PreconditionError : Error {
    using Error::Error;
};

/// Matrix shapes do not line up.
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// Exact linear solve hit a singular system.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// A cube complex violates its own structural invariants
/// (bad corner counts, inconsistent gluing, ambiguous minimal cubes).
struct StructuralError : Error {
    using Error::Error;
};

/// Division by the zero rational function.
struct DivisionByZeroError : Error {
    using Error::Error;
};

} // namespace cubegrowth
