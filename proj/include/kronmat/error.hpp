#pragma once
// error.hpp - domain error types shared across the library.

#include <stdexcept>
#include <string>

namespace kronmat {

// Two packed numbers with different digit bases were combined.
struct RadixMismatch : std::invalid_argument {
    explicit RadixMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

// A packing would allow a slot value to carry into its neighbour, or an
// entry does not fit its slot. Raised before any result is produced.
struct SlotOverflow : std::runtime_error {
    explicit SlotOverflow(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands are not square matrices of equal dimension.
struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

// A benchmark instance exceeds the configured desk-scale limits.
struct MemoryCapExceeded : std::runtime_error {
    explicit MemoryCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (matrix files, coefficient lists).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace kronmat
