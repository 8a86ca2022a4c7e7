#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sadic {

// Raised when a finite-depth analysis ran out of levels before it could
// produce the requested data. Distinct from a precondition violation: the
// request was legal, the materialized depth just did not suffice.
class DepthExhaustedError : public std::runtime_error {
public:
    DepthExhaustedError(const std::string& what, std::size_t depth_used)
        : std::runtime_error(what), depth_used_(depth_used) {}
    std::size_t depth_used() const { return depth_used_; }

private:
    std::size_t depth_used_;
};

// Raised when an input table is too short for the requested output length.
class CoverageError : public std::runtime_error {
public:
    CoverageError(const std::string& what, std::size_t required_length)
        : std::runtime_error(what), required_length_(required_length) {}
    std::size_t required_length() const { return required_length_; }

private:
    std::size_t required_length_;
};

}  // namespace sadic
