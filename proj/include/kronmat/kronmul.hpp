#pragma once
// kronmul.hpp - packed matrix multiplication: encode both matrices into two
// large naturals, multiply once, accumulate n-1 shifted copies, decode.
//
// The left matrix is vectorized row-major at stride n^2*p digits, the right
// column-major at stride p. Their product places entry product
// Avec[i]*Bvec[j] in slot i*n^2 + j; the shifted accumulation (stride
// (n^2+1)*p digits) collects each inner product into its result slot.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kronmat/layout.hpp"
#include "kronmat/matrix.hpp"
#include "kronmat/packint.hpp"

namespace kronmat {

struct MmmConfig {
    Radix radix{10};
    // Honored only after validate_layout passes; silent carries corrupt
    // results undetectably.
    std::optional<std::size_t> slot_width;
    std::size_t karatsuba_threshold = kKaratsubaThreshold;
};

struct MmmResult {
    MatrixNat product;
    OpCounter ops;
    SlotLayout layout;
};

// Row-major vectorization packed at stride n^2*p. Counts n^2 encode entries.
// Throws SlotOverflow if an entry needs more than p digits.
PackedNat encode_lhs(const MatrixNat& a, const SlotLayout& layout, OpCounter& ctr);

// Column-major vectorization packed at stride p. Counts n^2 encode entries.
PackedNat encode_rhs(const MatrixNat& b, const SlotLayout& layout, OpCounter& ctr);

// One big multiplication; slot i*n^2+j of the result is Avec[i]*Bvec[j].
PackedNat packed_product(const PackedNat& a, const PackedNat& b, OpCounter& ctr,
                         std::size_t karatsuba_threshold = kKaratsubaThreshold);

// Sum of n shifted copies of x at stride (n^2+1)*p digits, built with
// exactly n-1 additions and n-1 shifts of the original product.
PackedNat shifted_sum(const PackedNat& x, const SlotLayout& layout, OpCounter& ctr);

// Reads each result entry from its slot. Counts n^2 decode entries.
MatrixNat decode(const PackedNat& y, const SlotLayout& layout, OpCounter& ctr);

// Full pipeline with validation. Counter lands on big_mul=1, big_add=n-1,
// shift=n-1, encode_entry=2n^2, decode_entry=n^2.
MmmResult mmm(const MatrixNat& a, const MatrixNat& b, const MmmConfig& config = {});

// The accumulation loop rebinding its own operand each iteration, kept as a
// documented-incorrect variant: it sums shift offsets over all subset sums
// of {1..n-1}, which corrupts decode slots from n=3 up. Correct for n <= 2.
MatrixNat mmm_cascade_literal(const MatrixNat& a, const MatrixNat& b,
                              const MmmConfig& config = {});
MatrixNat mmm_cascade_literal(const MatrixNat& a, const MatrixNat& b,
                              const MmmConfig& config, OpCounter& ctr);

struct TraceStep {
    std::string addend;      // shifted operand, padded to the running width
    std::string partial_sum; // accumulated value at the same width
};

// Step-by-step record of the compact decimal scheme (below).
struct TraceReport {
    std::size_t n = 0;
    std::size_t slot_width = 0;
    std::string lhs_string;
    std::string rhs_string;
    std::string product_string;
    std::vector<TraceStep> additions;
    std::string final_string;  // natural rendering, no left padding
    std::string marked_string; // padded, result slots bracketed
    MatrixNat decoded;
};

// Compact decimal walkthrough over n^3 slots: lhs slot (r,c,k) holds A[r][k],
// rhs slot (r,c,k) holds B[k][c] (lexicographic, MS-first), the product is
// taken slot-wise, and n-1 additions of the 1-slot-shifted product align each
// inner product under MS slot r*n^2 + c*n + (n-1). The slot-wise product is
// deliberate: it is what makes the compact scheme readable, and it matches
// the genuine pipeline only in what the marked slots decode to. Radix 10
// only. Throws SlotOverflow if the carry bound does not fit p digits.
TraceReport trace_illustration(const MatrixNat& a, const MatrixNat& b,
                               std::size_t slot_width);

} // namespace kronmat
