#pragma once

#include <stdexcept>
#include <string>

namespace cacd {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A documented size bound was exceeded (desk-scale operations).
struct BoundError : Error {
    using Error::Error;
};

/// Input does not belong to the class an operation requires
/// (e.g. a non-tournament fed to the tournament recognizer).
struct TypeError : Error {
    using Error::Error;
};

/// A stated precondition does not hold for the given input.
struct PreconditionError : Error {
    using Error::Error;
};

/// Malformed external input (JSON files, CLI values).
struct InputError : Error {
    using Error::Error;
};

/// An internal consistency assertion failed. For the full-row insertion
/// this carries the forbidden submatrix pattern that blocked the step;
/// it signals either a condition-check bug or an unmet theorem hypothesis,
/// never a property of valid inputs.
struct InternalInconsistencyError : Error {
    std::string pattern;  // "F1", "F2", "F3" or "" for generic assertions

    explicit InternalInconsistencyError(const std::string& what, std::string pat = "")
        : Error(what), pattern(std::move(pat)) {}
};

}  // namespace cacd
