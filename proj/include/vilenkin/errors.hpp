#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vilenkin {

// A requested depth or index lies beyond the working resolution N.
class ResolutionError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Malformed input: digit out of Z_{m_k}, mismatched structures, bad p.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A construction needs more cells than the structure (or the cell cap) allows.
class CapacityError : public std::runtime_error {
public:
    CapacityError(const std::string& what, int required_resolution)
        : std::runtime_error(what), required_resolution_(required_resolution) {}

    int required_resolution() const noexcept { return required_resolution_; }

private:
    int required_resolution_;
};

}  // namespace vilenkin
