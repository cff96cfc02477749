#pragma once
// packint.hpp - radix-generic arbitrary-precision naturals with digit-level
// access and operation counting.
//
// Digits are stored least-significant first, each strictly below the radix.
// Canonical form has no most-significant zero digit; the value zero is the
// empty digit vector. Rendering reverses to the usual most-significant-first
// order.

#include <cstdint>
#include <string>
#include <vector>

#include "kronmat/error.hpp"

namespace kronmat {

// Digit base, 2 <= value <= 2^32. The cap keeps a digit product plus two
// digits representable in 64 bits, so the inner loops never overflow.
class Radix {
public:
    static constexpr uint64_t kMax = uint64_t{1} << 32;

    explicit Radix(uint64_t value);

    uint64_t value() const noexcept { return value_; }

    friend bool operator==(Radix a, Radix b) noexcept { return a.value_ == b.value_; }
    friend bool operator!=(Radix a, Radix b) noexcept { return a.value_ != b.value_; }

private:
    uint64_t value_;
};

// Per-kind operation tallies. big_mul counts one per top-level multiply,
// never per recursive sub-product. Counters from concurrent runs merge by
// field-wise addition.
struct OpCounter {
    uint64_t big_mul = 0;
    uint64_t big_add = 0;
    uint64_t shift = 0;
    uint64_t encode_entry = 0;
    uint64_t decode_entry = 0;

    uint64_t total() const noexcept {
        return big_mul + big_add + shift + encode_entry + decode_entry;
    }
    // Arithmetic gates only: multiplications and additions.
    uint64_t arithmetic() const noexcept { return big_mul + big_add; }

    OpCounter& operator+=(const OpCounter& o) noexcept {
        big_mul += o.big_mul;
        big_add += o.big_add;
        shift += o.shift;
        encode_entry += o.encode_entry;
        decode_entry += o.decode_entry;
        return *this;
    }

    friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

// Below this digit count multiplication stays schoolbook; above it the
// Karatsuba split kicks in.
inline constexpr std::size_t kKaratsubaThreshold = 32;

// Immutable after construction; safe to share across threads.
class PackedNat {
public:
    // Value zero in the given radix.
    explicit PackedNat(Radix radix) : radix_(radix) {}

    // Validates every digit against the radix and normalizes.
    static PackedNat from_digits(Radix radix, std::vector<uint64_t> digits);

    Radix radix() const noexcept { return radix_; }
    const std::vector<uint64_t>& digits() const noexcept { return digits_; }
    std::size_t digit_count() const noexcept { return digits_.size(); }
    bool is_zero() const noexcept { return digits_.empty(); }

    // Digit at position i, reading past the stored length as zero.
    uint64_t digit(std::size_t i) const noexcept {
        return i < digits_.size() ? digits_[i] : 0;
    }

    friend bool operator==(const PackedNat&, const PackedNat&) = default;

private:
    friend PackedNat pn_from_natural(uint64_t, Radix);
    friend PackedNat pn_add(const PackedNat&, const PackedNat&, OpCounter&);
    friend PackedNat pn_mul(const PackedNat&, const PackedNat&, OpCounter&, std::size_t);
    friend PackedNat pn_shift_digits(const PackedNat&, std::size_t, OpCounter&);

    Radix radix_;
    std::vector<uint64_t> digits_; // LS-first, each < radix, no trailing zeros
};

// Conversion from a machine natural.
PackedNat pn_from_natural(uint64_t v, Radix radix);

// Exact value as a machine natural; throws std::overflow_error past 2^64-1.
uint64_t pn_to_value(const PackedNat& x);

// value(a) + value(b). Counts one big_add. Throws RadixMismatch.
PackedNat pn_add(const PackedNat& a, const PackedNat& b, OpCounter& ctr);

// value(a) * value(b). Counts one big_mul regardless of internal recursion.
// Throws RadixMismatch. The threshold picks the schoolbook/Karatsuba
// crossover and exists for tests and tuning.
PackedNat pn_mul(const PackedNat& a, const PackedNat& b, OpCounter& ctr,
                 std::size_t karatsuba_threshold = kKaratsubaThreshold);

// value(x) * radix^d: d zero digits prepended at the least-significant end.
// Counts one shift.
PackedNat pn_shift_digits(const PackedNat& x, std::size_t d, OpCounter& ctr);

// Value of the digit run [index*width, (index+1)*width), LS-first. Digits
// beyond the stored length read as zero. width >= 1. Throws
// std::overflow_error if the slot value exceeds 2^64-1.
uint64_t pn_slot(const PackedNat& x, std::size_t index, std::size_t width);

// Most-significant-first rendering, left-padded with zeros to min_digits.
// Radix 10 renders as a plain decimal string; other radices render as a
// bracketed digit list.
std::string pn_to_digit_string(const PackedNat& x, std::size_t min_digits = 1);

// Total order on values. Throws RadixMismatch.
int pn_cmp(const PackedNat& a, const PackedNat& b);

inline bool pn_is_zero(const PackedNat& x) noexcept { return x.is_zero(); }

} // namespace kronmat
