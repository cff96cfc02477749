#include "kronmat/layout.hpp"

#include <stdexcept>
#include <string>

namespace kronmat {

namespace {

// Digit count of n * amax * bmax in the given radix, via exact packed
// products on a scratch counter.
std::size_t carry_bound_digits(std::size_t n, uint64_t amax, uint64_t bmax, Radix radix) {
    OpCounter scratch;
    PackedNat bound = pn_mul(pn_from_natural(n, radix), pn_from_natural(amax, radix), scratch);
    bound = pn_mul(bound, pn_from_natural(bmax, radix), scratch);
    return bound.digit_count();
}

} // namespace

std::size_t compute_slot_width(std::size_t n, uint64_t amax, uint64_t bmax, Radix radix) {
    if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    std::size_t digits = carry_bound_digits(n, amax, bmax, radix);
    return digits < 1 ? 1 : digits;
}

void validate_layout(const SlotLayout& layout, const MatrixNat& a, const MatrixNat& b) {
    if (a.n != b.n || a.n != layout.n || layout.n < 1) {
        throw DimensionMismatch("dimension mismatch: lhs " + std::to_string(a.n) +
                                ", rhs " + std::to_string(b.n) + ", layout " +
                                std::to_string(layout.n));
    }
    const std::size_t needed =
        compute_slot_width(layout.n, a.max_entry(), b.max_entry(), layout.radix);
    if (layout.slot_width < needed) {
        throw SlotOverflow(
            "slot width " + std::to_string(layout.slot_width) + " cannot hold the carry bound n*amax*bmax = " +
            std::to_string(layout.n) + "*" + std::to_string(a.max_entry()) + "*" +
            std::to_string(b.max_entry()) + "; radix " +
            std::to_string(layout.radix.value()) + " needs width >= " + std::to_string(needed));
    }
}

std::size_t result_slot_index(const SlotLayout& layout, std::size_t row, std::size_t col) {
    const std::size_t n = layout.n;
    if (row >= n || col >= n) throw std::out_of_range("result index outside matrix");
    return row * n * n * n + col * n + (n - 1) * (n * n + 1);
}

} // namespace kronmat
