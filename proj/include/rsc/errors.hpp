#pragma once

#include <stdexcept>
#include <string>

namespace rsc {

/// Malformed input: unsorted simplices, bad degrees, out-of-range parameters.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap (simplex count, enumeration bits) would be exceeded.
class cap_exceeded : public std::runtime_error {
public:
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rsc
