#pragma once

#include <stdexcept>
#include <string>

namespace dds {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files (CSV/FASTA/config), bad residue letters, schema violations.
struct ParseError : Error {
    using Error::Error;
};

// Mismatched vector/matrix dimensions, sequence longer than the fixed length.
struct DimensionError : Error {
    using Error::Error;
};

// Non-finite values, degenerate (zero-variance) features, divergent training.
struct NumericError : Error {
    using Error::Error;
};

// Invalid configuration values (sigma_max <= sigma_min, epochs < 1, ...).
struct ConfigError : Error {
    using Error::Error;
};

// Filesystem failures, bad magic/version/checksum in binary artifacts.
struct IoError : Error {
    using Error::Error;
};

}  // namespace dds
