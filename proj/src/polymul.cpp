#include "kronmat/polymul.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace kronmat {

namespace {

uint64_t max_coeff(const PolyNat& f) {
    return f.coeffs.empty() ? 0 : *std::max_element(f.coeffs.begin(), f.coeffs.end());
}

PackedNat pack_poly(const PolyNat& f, std::size_t stride, Radix radix) {
    std::vector<uint64_t> digits((f.term_count() - 1) * stride + stride, 0);
    for (std::size_t k = 0; k < f.term_count(); ++k) {
        uint64_t v = f.coeffs[k];
        for (std::size_t d = 0; d < stride && v != 0; ++d) {
            digits[k * stride + d] = v % radix.value();
            v /= radix.value();
        }
    }
    return PackedNat::from_digits(radix, std::move(digits));
}

} // namespace

std::size_t poly_slot_width(const PolyNat& f, const PolyNat& g, Radix radix) {
    if (f.is_zero() || g.is_zero()) {
        throw std::invalid_argument("slot width needs nonzero polynomials");
    }
    const uint64_t terms = std::min(f.term_count(), g.term_count());
    OpCounter scratch;
    PackedNat bound = pn_mul(pn_from_natural(terms, radix),
                             pn_from_natural(max_coeff(f), radix), scratch);
    bound = pn_mul(bound, pn_from_natural(max_coeff(g), radix), scratch);
    return std::max<std::size_t>(1, bound.digit_count());
}

PolyNat kron_poly_mul(const PolyNat& f, const PolyNat& g, Radix radix, OpCounter& ctr) {
    PolyNat lhs = f;
    PolyNat rhs = g;
    lhs.trim();
    rhs.trim();
    if (lhs.is_zero() || rhs.is_zero()) return {};

    const std::size_t q = poly_slot_width(lhs, rhs, radix);
    const PackedNat a = pack_poly(lhs, q, radix);
    const PackedNat b = pack_poly(rhs, q, radix);
    ctr.encode_entry += lhs.term_count() + rhs.term_count();

    const PackedNat x = pn_mul(a, b, ctr);

    const std::size_t out_terms = lhs.term_count() + rhs.term_count() - 1;
    PolyNat out;
    out.coeffs.resize(out_terms);
    for (std::size_t k = 0; k < out_terms; ++k) {
        out.coeffs[k] = pn_slot(x, k, q);
    }
    ctr.decode_entry += out_terms;
    out.trim();
    return out;
}

PolyNat naive_convolution(const PolyNat& f, const PolyNat& g) {
    if (f.is_zero() || g.is_zero()) return {};
    PolyNat out;
    out.coeffs.resize(f.term_count() + g.term_count() - 1, 0);
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) {
        unsigned __int128 acc = 0;
        for (std::size_t i = 0; i < f.term_count(); ++i) {
            if (k < i || k - i >= g.term_count()) continue;
            acc += static_cast<unsigned __int128>(f.coeffs[i]) * g.coeffs[k - i];
            if (acc > std::numeric_limits<uint64_t>::max()) {
                throw std::overflow_error("convolution coefficient exceeds 64 bits");
            }
        }
        out.coeffs[k] = static_cast<uint64_t>(acc);
    }
    out.trim();
    return out;
}

} // namespace kronmat
