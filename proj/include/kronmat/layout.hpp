#pragma once
// layout.hpp - carry-free slot geometry for packed matrix products.
//
// A slot is a run of p digits holding one logical value. Carry-freedom
// requires radix^p > n * amax * bmax: every result entry and every
// intermediate slot is a sum of at most n single products.

#include <cstdint>

#include "kronmat/matrix.hpp"
#include "kronmat/packint.hpp"

namespace kronmat {

struct SlotLayout {
    std::size_t n;          // matrix dimension
    std::size_t slot_width; // p, digits per slot
    Radix radix;

    // Digit stride between consecutive left-operand entries.
    std::size_t lhs_stride() const noexcept { return n * n * slot_width; }
    // Digit stride between consecutive right-operand entries.
    std::size_t rhs_stride() const noexcept { return slot_width; }
    // Digit stride of one accumulation shift.
    std::size_t shift_stride() const noexcept { return slot_width * (n * n + 1); }
    std::size_t product_slot_count() const noexcept { return n * n * n * n; }
};

// Smallest p with radix^p > n * amax * bmax. Computed with exact packed
// arithmetic, so no operand magnitude can overflow it. Requires n >= 1.
std::size_t compute_slot_width(std::size_t n, uint64_t amax, uint64_t bmax, Radix radix);

// Checks dimensions and the carry-freedom bound for a concrete instance.
// Throws DimensionMismatch or SlotOverflow (naming the offending bound).
void validate_layout(const SlotLayout& layout, const MatrixNat& a, const MatrixNat& b);

// LS-first slot index of result entry (row, col) in the shifted sum:
// row*n^3 + col*n + (n-1)*(n^2+1). Injective over the result grid.
std::size_t result_slot_index(const SlotLayout& layout, std::size_t row, std::size_t col);

} // namespace kronmat
