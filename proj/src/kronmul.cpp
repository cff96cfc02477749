#include "kronmat/kronmul.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace kronmat {

namespace {

// Writes v into digits[offset..offset+width) in the given radix. Throws
// SlotOverflow when v needs more than width digits.
void place_entry(std::vector<uint64_t>& digits, std::size_t offset, uint64_t v,
                 std::size_t width, Radix radix) {
    for (std::size_t k = 0; k < width && v != 0; ++k) {
        digits[offset + k] = v % radix.value();
        v /= radix.value();
    }
    if (v != 0) {
        throw SlotOverflow("entry does not fit a " + std::to_string(width) +
                           "-digit slot in radix " + std::to_string(radix.value()));
    }
}

PackedNat encode_vectorization(const MatrixNat& m, const SlotLayout& layout,
                               std::size_t stride, bool column_major, OpCounter& ctr) {
    const std::size_t n = layout.n;
    std::vector<uint64_t> digits((n * n - 1) * stride + layout.slot_width, 0);
    for (std::size_t i = 0; i < n * n; ++i) {
        const uint64_t v = column_major ? m.at(i % n, i / n) : m.at(i / n, i % n);
        place_entry(digits, i * stride, v, layout.slot_width, layout.radix);
    }
    ctr.encode_entry += n * n;
    return PackedNat::from_digits(layout.radix, std::move(digits));
}

enum class LoopForm { accumulator, cascade_literal };

MmmResult run_pipeline(const MatrixNat& a, const MatrixNat& b,
                       const MmmConfig& config, LoopForm form) {
    if (a.n != b.n) {
        throw DimensionMismatch("dimension mismatch: lhs " + std::to_string(a.n) +
                                ", rhs " + std::to_string(b.n));
    }
    const std::size_t width =
        config.slot_width
            ? *config.slot_width
            : compute_slot_width(a.n, a.max_entry(), b.max_entry(), config.radix);
    const SlotLayout layout{a.n, width, config.radix};
    validate_layout(layout, a, b);

    OpCounter ctr;
    const PackedNat lhs = encode_lhs(a, layout, ctr);
    const PackedNat rhs = encode_rhs(b, layout, ctr);
    PackedNat x = packed_product(lhs, rhs, ctr, config.karatsuba_threshold);
    if (form == LoopForm::accumulator) {
        x = shifted_sum(x, layout, ctr);
    } else {
        for (std::size_t k = layout.n - 1; k >= 1; --k) {
            x = pn_add(x, pn_shift_digits(x, k * layout.shift_stride(), ctr), ctr);
        }
    }
    MatrixNat c = decode(x, layout, ctr);
    return MmmResult{std::move(c), ctr, layout};
}

} // namespace

PackedNat encode_lhs(const MatrixNat& a, const SlotLayout& layout, OpCounter& ctr) {
    return encode_vectorization(a, layout, layout.lhs_stride(), false, ctr);
}

PackedNat encode_rhs(const MatrixNat& b, const SlotLayout& layout, OpCounter& ctr) {
    return encode_vectorization(b, layout, layout.rhs_stride(), true, ctr);
}

PackedNat packed_product(const PackedNat& a, const PackedNat& b, OpCounter& ctr,
                         std::size_t karatsuba_threshold) {
    return pn_mul(a, b, ctr, karatsuba_threshold);
}

PackedNat shifted_sum(const PackedNat& x, const SlotLayout& layout, OpCounter& ctr) {
    PackedNat y = x;
    for (std::size_t k = 1; k < layout.n; ++k) {
        y = pn_add(y, pn_shift_digits(x, k * layout.shift_stride(), ctr), ctr);
    }
    return y;
}

MatrixNat decode(const PackedNat& y, const SlotLayout& layout, OpCounter& ctr) {
    MatrixNat c(layout.n);
    for (std::size_t r = 0; r < layout.n; ++r) {
        for (std::size_t col = 0; col < layout.n; ++col) {
            c.at(r, col) = pn_slot(y, result_slot_index(layout, r, col), layout.slot_width);
        }
    }
    ctr.decode_entry += layout.n * layout.n;
    return c;
}

MmmResult mmm(const MatrixNat& a, const MatrixNat& b, const MmmConfig& config) {
    return run_pipeline(a, b, config, LoopForm::accumulator);
}

MatrixNat mmm_cascade_literal(const MatrixNat& a, const MatrixNat& b,
                              const MmmConfig& config) {
    OpCounter ignored;
    return mmm_cascade_literal(a, b, config, ignored);
}

MatrixNat mmm_cascade_literal(const MatrixNat& a, const MatrixNat& b,
                              const MmmConfig& config, OpCounter& ctr) {
    MmmResult res = run_pipeline(a, b, config, LoopForm::cascade_literal);
    ctr = res.ops;
    return std::move(res.product);
}

TraceReport trace_illustration(const MatrixNat& a, const MatrixNat& b,
                               std::size_t slot_width) {
    const Radix radix{10};
    if (a.n != b.n) {
        throw DimensionMismatch("dimension mismatch: lhs " + std::to_string(a.n) +
                                ", rhs " + std::to_string(b.n));
    }
    const std::size_t n = a.n;
    const std::size_t p = slot_width;
    // Same carry bound as the template: a summed slot holds up to n products.
    {
        const SlotLayout guard{n, p, radix};
        validate_layout(guard, a, b);
    }

    const std::size_t slots = n * n * n;
    OpCounter scratch;

    // MS slot m = ((r*n + c)*n + k) maps to LS slot slots-1-m.
    std::vector<uint64_t> lhs_digits(slots * p, 0);
    std::vector<uint64_t> rhs_digits(slots * p, 0);
    std::vector<uint64_t> prod_digits(slots * p, 0);
    std::size_t ms = 0;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t k = 0; k < n; ++k, ++ms) {
                const std::size_t off = (slots - 1 - ms) * p;
                place_entry(lhs_digits, off, a.at(r, k), p, radix);
                place_entry(rhs_digits, off, b.at(k, c), p, radix);
                const unsigned __int128 prod =
                    static_cast<unsigned __int128>(a.at(r, k)) * b.at(k, c);
                if (prod > std::numeric_limits<uint64_t>::max()) {
                    throw std::overflow_error("slot product exceeds 64 bits");
                }
                place_entry(prod_digits, off, static_cast<uint64_t>(prod), p, radix);
            }
        }
    }
    const PackedNat lhs = PackedNat::from_digits(radix, std::move(lhs_digits));
    const PackedNat rhs = PackedNat::from_digits(radix, std::move(rhs_digits));
    const PackedNat product = PackedNat::from_digits(radix, std::move(prod_digits));

    TraceReport report;
    report.n = n;
    report.slot_width = p;
    report.lhs_string = pn_to_digit_string(lhs, slots * p);
    report.rhs_string = pn_to_digit_string(rhs, slots * p);
    report.product_string = pn_to_digit_string(product, slots * p);

    PackedNat sum = product;
    for (std::size_t k = 1; k < n; ++k) {
        const PackedNat shifted = pn_shift_digits(product, k * p, scratch);
        sum = pn_add(sum, shifted, scratch);
        const std::size_t width = (slots + k) * p;
        report.additions.push_back(
            TraceStep{pn_to_digit_string(shifted, width), pn_to_digit_string(sum, width)});
    }

    report.final_string = pn_to_digit_string(sum);

    // Result entry (r,c) sits under MS slot r*n^2 + c*n + (n-1) of the
    // widened frame of n^3 + n - 1 slots.
    const std::size_t total_slots = slots + n - 1;
    std::vector<bool> marked(total_slots, false);
    report.decoded = MatrixNat(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            const std::size_t ms_slot = r * n * n + c * n + (n - 1);
            marked[ms_slot] = true;
            report.decoded.at(r, c) = pn_slot(sum, total_slots - 1 - ms_slot, p);
        }
    }
    const std::string padded = pn_to_digit_string(sum, total_slots * p);
    for (std::size_t s = 0; s < total_slots; ++s) {
        const std::string piece = padded.substr(s * p, p);
        report.marked_string += marked[s] ? "[" + piece + "]" : piece;
    }
    return report;
}

} // namespace kronmat
