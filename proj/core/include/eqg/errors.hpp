#pragma once

#include <stdexcept>

namespace eqg {

// Invalid arguments: mismatched leg structure, bad family/word combinations, etc.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requests exceeding the configured enumeration / storage ceilings.
struct SizeLimitError : std::length_error {
    using std::length_error::length_error;
};

} // namespace eqg
