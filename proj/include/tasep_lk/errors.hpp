#pragma once

#include <stdexcept>
#include <string>

namespace tasep_lk {

// Error taxonomy maps onto CLI exit codes: validation -> 2, unresolved -> 3,
// no_wall -> 4. Library callers can catch the base type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad inputs: parameters out of range, densities off the admissible sheet.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// The theory does not resolve the requested object (branch exhausted,
// matching bracket without a sign change, profile not covered by a branch).
class UnresolvedError : public Error {
public:
    explicit UnresolvedError(const std::string& msg) : Error(msg) {}
};

// A wall was required but does not exist for these parameters.
class NoWallError : public Error {
public:
    explicit NoWallError(const std::string& msg) : Error(msg) {}
};

}  // namespace tasep_lk
