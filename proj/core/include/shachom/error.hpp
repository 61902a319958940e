#ifndef SHACHOM_ERROR_HPP
#define SHACHOM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace shachom {

/// Bad arguments or inconsistent inputs: rejected before any computation.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem and parse failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A violated internal invariant; indicates a bug, not a user error.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace shachom

#endif
