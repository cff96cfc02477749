#pragma once
// polymul.hpp - polynomial multiplication by Kronecker substitution: pack
// both coefficient vectors at a common slot stride, multiply once, read the
// convolution back out of the digit slots.

#include <cstdint>
#include <vector>

#include "kronmat/packint.hpp"

namespace kronmat {

// Natural-number polynomial; coeffs[k] is the degree-k coefficient. The
// canonical form trims trailing (highest-degree) zeros, so zero is empty.
struct PolyNat {
    std::vector<uint64_t> coeffs;

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const noexcept { return coeffs.empty(); }
    std::size_t term_count() const noexcept { return coeffs.size(); }

    friend bool operator==(const PolyNat&, const PolyNat&) = default;
};

// Smallest q with radix^q > min(len f, len g) * max(f) * max(g): a
// convolution coefficient sums at most min(len f, len g) products.
// Requires both polynomials nonzero.
std::size_t poly_slot_width(const PolyNat& f, const PolyNat& g, Radix radix);

// Evaluates both polynomials at radix^q, multiplies once, and decodes
// len f + len g - 1 slots. The counter lands on big_mul=1, big_add=0,
// encode_entry=len f+len g, decode_entry=len f+len g-1. Zero input gives
// the zero polynomial with no operations.
PolyNat kron_poly_mul(const PolyNat& f, const PolyNat& g, Radix radix, OpCounter& ctr);

// Direct convolution oracle, independent of the packed path. Throws
// std::overflow_error if a coefficient exceeds 2^64-1.
PolyNat naive_convolution(const PolyNat& f, const PolyNat& g);

} // namespace kronmat
