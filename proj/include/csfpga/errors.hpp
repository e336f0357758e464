#pragma once

#include <stdexcept>
#include <string>

namespace csfpga {

// Error taxonomy shared across the toolkit. The CLI maps each class to a
// distinct exit code (see tools/).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file; carries file/line for diagnostics.
struct ParseError : Error {
    ParseError(const std::string &file_, int line_, const std::string &msg)
        : Error(file_ + ":" + std::to_string(line_) + ": " + msg), file(file_), line(line_)
    {
    }
    std::string file;
    int line;
};

// A loaded object violates a documented invariant.
struct ValidationError : Error {
    using Error::Error;
};

// Missing table entry (tech model, arch, ...).
struct LookupError : Error {
    using Error::Error;
};

// Shape mismatch between an array and its target pattern.
struct DimensionError : Error {
    using Error::Error;
};

// Argument outside an operation's mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

// Design does not fit the fabric (capacity, grid).
struct ResourceError : Error {
    using Error::Error;
};

// Router gave up with overused resources.
struct CongestionError : Error {
    CongestionError(const std::string &msg, int overuse) : Error(msg), max_overuse(overuse) {}
    int max_overuse;
};

// Attempt to load or reprogram the active context.
struct ContextInUseError : Error {
    using Error::Error;
};

// Switch to a plane that has not finished loading (or was never loaded).
struct NotReadyError : Error {
    using Error::Error;
};

// Workload does not fit its scheduling mode.
struct ModeError : Error {
    using Error::Error;
};

} // namespace csfpga
