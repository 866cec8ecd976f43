#pragma once

#include <stdexcept>

namespace collabmkt {

/// Malformed or inconsistent input data: parse failures, dangling
/// references, duplicate ids. The message names file, row, and field
/// when the error comes from a loader.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An SDS with no staffed university: unknown code or empty candidate set.
struct EmptySectorError : DataError {
    using DataError::DataError;
};

/// A staffed SDS whose total Scientific Strength is zero (no publications
/// touch it). Kept distinct from EmptySectorError on purpose.
struct ZeroStrengthError : DataError {
    using DataError::DataError;
};

/// Qualitative Productivity requested for a (university, SDS) pair with
/// zero research staff.
struct UndefinedQpError : DataError {
    using DataError::DataError;
};

/// Invalid or infeasible generator configuration.
struct ConfigError : DataError {
    using DataError::DataError;
};

} // namespace collabmkt
