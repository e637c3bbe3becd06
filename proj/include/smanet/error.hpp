#pragma once

#include <stdexcept>
#include <string>

namespace smanet {

// Base for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Unknown code / node id / key lookups.
struct LookupError : Error {
    using Error::Error;
};

// Malformed input files (language files, scenario documents).
struct FormatError : Error {
    using Error::Error;
};

// Filesystem failures.
struct IoError : Error {
    using Error::Error;
};

// A {{key}} that no language file entry resolves.
struct MissingKeyError : Error {
    using Error::Error;
};

// Invalid scenario configuration; message lists every violation.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace smanet
