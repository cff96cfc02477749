#include "kronmat/packint.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <span>
#include <stdexcept>

namespace kronmat {

namespace {

using Digits = std::vector<uint64_t>;
using DigitSpan = std::span<const uint64_t>;

void trim(Digits& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

DigitSpan trimmed(DigitSpan d) {
    while (!d.empty() && d.back() == 0) d = d.first(d.size() - 1);
    return d;
}

// out = a + b. Inputs trimmed, output trimmed. A digit sum is at most
// 2*radix - 1 < 2^33, so plain uint64_t arithmetic never overflows.
Digits add_digits(DigitSpan a, DigitSpan b, uint64_t radix) {
    if (a.size() < b.size()) std::swap(a, b);
    Digits out;
    out.reserve(a.size() + 1);
    uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        uint64_t s = a[i] + (i < b.size() ? b[i] : 0) + carry;
        if (s >= radix) {
            s -= radix;
            carry = 1;
        } else {
            carry = 0;
        }
        out.push_back(s);
    }
    if (carry) out.push_back(1);
    return out;
}

// a -= b in place; requires value(a) >= value(b).
void sub_in_place(Digits& a, DigitSpan b, uint64_t radix) {
    uint64_t borrow = 0;
    for (std::size_t i = 0; i < b.size() || borrow; ++i) {
        assert(i < a.size());
        uint64_t take = (i < b.size() ? b[i] : 0) + borrow;
        if (a[i] >= take) {
            a[i] -= take;
            borrow = 0;
        } else {
            a[i] = a[i] + radix - take;
            borrow = 1;
        }
    }
    trim(a);
}

// z[offset..] += part, rippling carries. The caller guarantees the
// accumulated value fits z.
void add_at(Digits& z, DigitSpan part, std::size_t offset, uint64_t radix) {
    uint64_t carry = 0;
    std::size_t i = 0;
    for (; i < part.size(); ++i) {
        assert(offset + i < z.size());
        uint64_t s = z[offset + i] + part[i] + carry;
        if (s >= radix) {
            s -= radix;
            carry = 1;
        } else {
            carry = 0;
        }
        z[offset + i] = s;
    }
    while (carry) {
        assert(offset + i < z.size());
        uint64_t s = z[offset + i] + carry;
        if (s >= radix) {
            s -= radix;
            carry = 1;
        } else {
            carry = 0;
        }
        z[offset + i] = s;
        ++i;
    }
}

// O(na*nb) product. A column step computes z + a_i*b_j + carry, bounded by
// radix^2 - 1 <= 2^64 - 1.
Digits schoolbook_mul(DigitSpan a, DigitSpan b, uint64_t radix) {
    if (a.empty() || b.empty()) return {};
    Digits z(a.size() + b.size(), 0);
    const bool pow2 = (radix & (radix - 1)) == 0;
    if (pow2) {
        const uint64_t mask = radix - 1;
        unsigned sh = 0;
        while ((uint64_t{1} << sh) != radix) ++sh;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const uint64_t ai = a[i];
            if (ai == 0) continue;
            uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = z[i + j] + ai * b[j] + carry;
                z[i + j] = cur & mask;
                carry = cur >> sh;
            }
            z[i + b.size()] = carry;
        }
    } else {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const uint64_t ai = a[i];
            if (ai == 0) continue;
            uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = z[i + j] + ai * b[j] + carry;
                z[i + j] = cur % radix;
                carry = cur / radix;
            }
            z[i + b.size()] = carry;
        }
    }
    trim(z);
    return z;
}

Digits mul_dispatch(DigitSpan a, DigitSpan b, uint64_t radix, std::size_t threshold);

// Very unbalanced operands: multiply the longer one in shorter-sized chunks
// so the recursive products stay balanced.
Digits mul_chunked(DigitSpan longer, DigitSpan shorter, uint64_t radix,
                   std::size_t threshold) {
    Digits z(longer.size() + shorter.size(), 0);
    const std::size_t w = shorter.size();
    for (std::size_t offset = 0; offset < longer.size(); offset += w) {
        DigitSpan chunk = longer.subspan(offset, std::min(w, longer.size() - offset));
        Digits part = mul_dispatch(trimmed(chunk), shorter, radix, threshold);
        add_at(z, part, offset, radix);
    }
    trim(z);
    return z;
}

// Karatsuba split at m = ceil(max/2): a1*b1*R^2m + (a0*b1 + a1*b0)*R^m + a0*b0,
// with the cross term computed as (a0+a1)(b0+b1) - a0*b0 - a1*b1.
Digits mul_karatsuba(DigitSpan a, DigitSpan b, uint64_t radix,
                     std::size_t threshold) {
    const std::size_t m = (std::max(a.size(), b.size()) + 1) / 2;
    DigitSpan a0 = trimmed(a.first(std::min(m, a.size())));
    DigitSpan a1 = a.size() > m ? a.subspan(m) : DigitSpan{};
    DigitSpan b0 = trimmed(b.first(std::min(m, b.size())));
    DigitSpan b1 = b.size() > m ? b.subspan(m) : DigitSpan{};

    Digits z0 = mul_dispatch(a0, b0, radix, threshold);
    Digits z2 = mul_dispatch(a1, b1, radix, threshold);
    Digits sa = add_digits(a0, a1, radix);
    Digits sb = add_digits(b0, b1, radix);
    Digits z1 = mul_dispatch(sa, sb, radix, threshold);
    sub_in_place(z1, z0, radix);
    sub_in_place(z1, z2, radix);

    Digits z(a.size() + b.size(), 0);
    add_at(z, z0, 0, radix);
    add_at(z, z1, m, radix);
    add_at(z, z2, 2 * m, radix);
    trim(z);
    return z;
}

Digits mul_dispatch(DigitSpan a, DigitSpan b, uint64_t radix, std::size_t threshold) {
    const std::size_t lo = std::min(a.size(), b.size());
    const std::size_t hi = std::max(a.size(), b.size());
    if (lo == 0) return {};
    if (lo <= 1 || lo < threshold) return schoolbook_mul(a, b, radix);
    if (hi >= 2 * lo) {
        return a.size() >= b.size() ? mul_chunked(a, b, radix, threshold)
                                    : mul_chunked(b, a, radix, threshold);
    }
    return mul_karatsuba(a, b, radix, threshold);
}

void require_same_radix(const PackedNat& a, const PackedNat& b) {
    if (a.radix() != b.radix()) {
        throw RadixMismatch("radix mismatch: " + std::to_string(a.radix().value()) +
                            " vs " + std::to_string(b.radix().value()));
    }
}

} // namespace

Radix::Radix(uint64_t value) : value_(value) {
    if (value < 2 || value > kMax) {
        throw std::invalid_argument("radix must lie in [2, 2^32], got " +
                                    std::to_string(value));
    }
}

PackedNat PackedNat::from_digits(Radix radix, std::vector<uint64_t> digits) {
    for (uint64_t d : digits) {
        if (d >= radix.value()) {
            throw std::invalid_argument("digit " + std::to_string(d) +
                                        " out of range for radix " +
                                        std::to_string(radix.value()));
        }
    }
    trim(digits);
    PackedNat out(radix);
    out.digits_ = std::move(digits);
    return out;
}

PackedNat pn_from_natural(uint64_t v, Radix radix) {
    PackedNat out(radix);
    while (v != 0) {
        out.digits_.push_back(v % radix.value());
        v /= radix.value();
    }
    return out;
}

uint64_t pn_to_value(const PackedNat& x) {
    unsigned __int128 acc = 0;
    for (std::size_t i = x.digit_count(); i-- > 0;) {
        acc = acc * x.radix().value() + x.digits()[i];
        if (acc > std::numeric_limits<uint64_t>::max()) {
            throw std::overflow_error("packed value exceeds 64 bits");
        }
    }
    return static_cast<uint64_t>(acc);
}

PackedNat pn_add(const PackedNat& a, const PackedNat& b, OpCounter& ctr) {
    require_same_radix(a, b);
    ctr.big_add += 1;
    PackedNat out(a.radix());
    out.digits_ = add_digits(a.digits(), b.digits(), a.radix().value());
    return out;
}

PackedNat pn_mul(const PackedNat& a, const PackedNat& b, OpCounter& ctr,
                 std::size_t karatsuba_threshold) {
    require_same_radix(a, b);
    ctr.big_mul += 1;
    PackedNat out(a.radix());
    out.digits_ = mul_dispatch(a.digits(), b.digits(), a.radix().value(),
                               karatsuba_threshold);
    return out;
}

PackedNat pn_shift_digits(const PackedNat& x, std::size_t d, OpCounter& ctr) {
    ctr.shift += 1;
    PackedNat out(x.radix());
    if (!x.is_zero()) {
        out.digits_.assign(d, 0);
        out.digits_.insert(out.digits_.end(), x.digits().begin(), x.digits().end());
    }
    return out;
}

uint64_t pn_slot(const PackedNat& x, std::size_t index, std::size_t width) {
    if (width < 1) throw std::invalid_argument("slot width must be >= 1");
    unsigned __int128 acc = 0;
    const std::size_t base = index * width;
    for (std::size_t k = width; k-- > 0;) {
        acc = acc * x.radix().value() + x.digit(base + k);
        if (acc > std::numeric_limits<uint64_t>::max()) {
            throw std::overflow_error("slot value exceeds 64 bits");
        }
    }
    return static_cast<uint64_t>(acc);
}

std::string pn_to_digit_string(const PackedNat& x, std::size_t min_digits) {
    const std::size_t count = std::max<std::size_t>(min_digits, 1);
    const std::size_t width = std::max(count, x.digit_count());
    if (x.radix().value() == 10) {
        std::string out(width, '0');
        for (std::size_t i = 0; i < x.digit_count(); ++i) {
            out[width - 1 - i] = static_cast<char>('0' + x.digits()[i]);
        }
        return out;
    }
    std::string out = "[";
    for (std::size_t i = width; i-- > 0;) {
        out += std::to_string(x.digit(i));
        if (i != 0) out += ',';
    }
    out += ']';
    return out;
}

int pn_cmp(const PackedNat& a, const PackedNat& b) {
    require_same_radix(a, b);
    if (a.digit_count() != b.digit_count()) {
        return a.digit_count() < b.digit_count() ? -1 : 1;
    }
    for (std::size_t i = a.digit_count(); i-- > 0;) {
        if (a.digits()[i] != b.digits()[i]) {
            return a.digits()[i] < b.digits()[i] ? -1 : 1;
        }
    }
    return 0;
}

} // namespace kronmat
