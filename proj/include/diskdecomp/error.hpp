#pragma once

#include <stdexcept>
#include <string>

namespace diskdecomp {

/// Raised when an operation's precondition does not hold (degenerate arc,
/// non-unit jumps, enumeration cap, out-of-range signal count, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed external input: sequence strings, JSON documents, files.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& what) : Error(what) {}
};

} // namespace diskdecomp
