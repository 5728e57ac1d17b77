#pragma once

#include <stdexcept>
#include <string>

namespace celebnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A file could not be read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Input data or configuration violates a documented contract.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A quantity whose definition needs non-degenerate input: empty timeline,
/// constant rank list, category with zero authored tweets, and so on.
class UndefinedError : public Error {
public:
    using Error::Error;
};

} // namespace celebnet
