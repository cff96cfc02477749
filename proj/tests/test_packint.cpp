#include "doctest.h"

#include <limits>
#include <vector>

#include "kronmat/oracle.hpp"
#include "kronmat/packint.hpp"

using namespace kronmat;

namespace {

using u128 = unsigned __int128;

// Reference composition, independent of pn_to_value's overflow handling.
u128 compose(const PackedNat& x) {
    u128 acc = 0;
    for (std::size_t i = x.digit_count(); i-- > 0;) {
        acc = acc * x.radix().value() + x.digits()[i];
    }
    return acc;
}

PackedNat random_packed(RngState& rng, std::size_t len, Radix radix) {
    std::vector<uint64_t> digits(len);
    for (auto& d : digits) d = rng.next_below(radix.value());
    return PackedNat::from_digits(radix, std::move(digits));
}

const uint64_t kRadices[] = {10, 7, uint64_t{1} << 16, uint64_t{1} << 32};

} // namespace

TEST_SUITE_BEGIN("packint");

TEST_CASE("radix bounds") {
    CHECK_THROWS_AS(Radix(1), std::invalid_argument);
    CHECK_THROWS_AS(Radix(0), std::invalid_argument);
    CHECK_THROWS_AS(Radix((uint64_t{1} << 32) + 1), std::invalid_argument);
    CHECK(Radix(2).value() == 2);
    CHECK(Radix(uint64_t{1} << 32).value() == uint64_t{1} << 32);
}

TEST_CASE("from_natural") {
    CHECK(pn_from_natural(0, Radix(10)).is_zero());
    CHECK(pn_from_natural(0, Radix(10)).digit_count() == 0);

    const PackedNat x = pn_from_natural(81003, Radix(10));
    CHECK(x.digits() == std::vector<uint64_t>{3, 0, 0, 1, 8});

    // 81003 = 1 * 65536 + 15467
    const PackedNat y = pn_from_natural(81003, Radix(uint64_t{1} << 16));
    CHECK(y.digits() == std::vector<uint64_t>{15467, 1});
}

TEST_CASE("from_digits validates and normalizes") {
    CHECK_THROWS_AS(PackedNat::from_digits(Radix(10), {3, 12}), std::invalid_argument);
    const PackedNat x = PackedNat::from_digits(Radix(10), {3, 1, 0, 0});
    CHECK(x.digit_count() == 2);
    // Normalization is idempotent.
    CHECK(PackedNat::from_digits(Radix(10), x.digits()) == x);
    CHECK(PackedNat::from_digits(Radix(10), {0, 0, 0}).is_zero());
}

TEST_CASE("add carries") {
    OpCounter ctr;
    const Radix ten(10);
    const PackedNat sum = pn_add(pn_from_natural(99, ten), pn_from_natural(1, ten), ctr);
    CHECK(pn_to_value(sum) == 100);
    CHECK(ctr.big_add == 1);
    CHECK(ctr.total() == 1);
}

TEST_CASE("add matches the two-digit-shift walkthrough") {
    OpCounter ctr;
    const Radix ten(10);
    const PackedNat a = pn_from_natural(514061615281832ULL, ten);
    const PackedNat b = pn_from_natural(51406161528183200ULL, ten);
    CHECK(pn_to_value(pn_add(a, b, ctr)) == 51920223143465032ULL);
    CHECK(b == pn_shift_digits(a, 2, ctr));
}

TEST_CASE("add and mul error on radix mismatch") {
    OpCounter ctr;
    const PackedNat a = pn_from_natural(5, Radix(10));
    const PackedNat b = pn_from_natural(5, Radix(16));
    CHECK_THROWS_AS(pn_add(a, b, ctr), RadixMismatch);
    CHECK_THROWS_AS(pn_mul(a, b, ctr), RadixMismatch);
    CHECK_THROWS_AS(pn_cmp(a, b), RadixMismatch);
}

TEST_CASE("mul basics") {
    OpCounter ctr;
    const Radix ten(10);
    CHECK(pn_to_value(pn_mul(pn_from_natural(201, ten), pn_from_natural(403, ten), ctr)) ==
          81003);
    const PackedNat x = pn_from_natural(987654321, ten);
    CHECK(pn_mul(x, pn_from_natural(1, ten), ctr) == x);
    CHECK(pn_mul(x, pn_from_natural(0, ten), ctr).is_zero());
    CHECK(ctr.big_mul == 3);
}

TEST_CASE("mul counts once per top-level call") {
    RngState rng(7);
    OpCounter ctr;
    const Radix radix(10);
    const PackedNat a = random_packed(rng, 300, radix);
    const PackedNat b = random_packed(rng, 300, radix);
    (void)pn_mul(a, b, ctr, 4); // deep Karatsuba recursion
    CHECK(ctr.big_mul == 1);
    CHECK(ctr.total() == 1);
}

TEST_CASE("add and mul agree with fixed-width reference arithmetic") {
    RngState rng(42);
    OpCounter ctr;
    for (uint64_t rv : kRadices) {
        const Radix radix(rv);
        for (int i = 0; i < 2500; ++i) {
            const uint64_t a = rng.next() >> 1; // below 2^63
            const uint64_t b = rng.next() >> 1;
            const PackedNat pa = pn_from_natural(a, radix);
            const PackedNat pb = pn_from_natural(b, radix);
            CHECK(compose(pn_add(pa, pb, ctr)) == u128{a} + b);
            CHECK(compose(pn_mul(pa, pb, ctr)) == u128{a} * b);
        }
    }
}

TEST_CASE("round trip through machine naturals") {
    RngState rng(3);
    for (uint64_t rv : kRadices) {
        const Radix radix(rv);
        for (int i = 0; i < 500; ++i) {
            const uint64_t v = rng.next() >> (i % 40);
            const PackedNat x = pn_from_natural(v, radix);
            CHECK(pn_to_value(x) == v);
            for (uint64_t d : x.digits()) CHECK(d < rv);
        }
    }
}

TEST_CASE("karatsuba equals schoolbook") {
    RngState rng(11);
    for (uint64_t rv : kRadices) {
        const Radix radix(rv);
        for (std::size_t len : {33u, 64u, 257u, 1024u}) {
            const PackedNat a = random_packed(rng, len, radix);
            const PackedNat b = random_packed(rng, rng.next_below(len) + 1, radix);
            OpCounter ctr;
            const PackedNat fast = pn_mul(a, b, ctr, 16);
            const PackedNat slow = pn_mul(a, b, ctr, std::numeric_limits<std::size_t>::max());
            CHECK(fast == slow);
        }
    }
    // One heavyweight pair at the 4096-digit scale.
    const Radix radix(uint64_t{1} << 32);
    const PackedNat a = random_packed(rng, 4096, radix);
    const PackedNat b = random_packed(rng, 4096, radix);
    OpCounter ctr;
    CHECK(pn_mul(a, b, ctr, 32) ==
          pn_mul(a, b, ctr, std::numeric_limits<std::size_t>::max()));
}

TEST_CASE("shift prepends zero digits") {
    OpCounter ctr;
    const Radix ten(10);
    CHECK(pn_to_value(pn_shift_digits(pn_from_natural(12, ten), 2, ctr)) == 1200);
    const PackedNat x = pn_from_natural(987, ten);
    CHECK(pn_shift_digits(x, 0, ctr) == x);
    CHECK(pn_shift_digits(pn_from_natural(0, ten), 5, ctr).is_zero());
    CHECK(ctr.shift == 3);
}

TEST_CASE("slot extraction") {
    const PackedNat x = pn_from_natural(81003, Radix(10));
    CHECK(pn_slot(x, 0, 2) == 3);
    CHECK(pn_slot(x, 1, 2) == 10);
    CHECK(pn_slot(x, 5, 2) == 0); // past the stored digits
    CHECK_THROWS_AS(pn_slot(x, 0, 0), std::invalid_argument);
}

TEST_CASE("slots commute with whole-slot shifts") {
    RngState rng(5);
    OpCounter ctr;
    for (int i = 0; i < 200; ++i) {
        const Radix radix(kRadices[i % 4]);
        const PackedNat x = random_packed(rng, rng.next_below(40) + 1, radix);
        // Keep radix^w within 64 bits so the extracted values stay representable.
        const std::size_t w_cap = radix.value() >= (uint64_t{1} << 32) ? 2 : 4;
        const std::size_t w = rng.next_below(w_cap) + 1;
        const std::size_t k = rng.next_below(5);
        const std::size_t idx = rng.next_below(8);
        const PackedNat shifted = pn_shift_digits(x, w * k, ctr);
        CHECK(pn_slot(shifted, idx + k, w) == pn_slot(x, idx, w));
    }
}

TEST_CASE("digit strings") {
    const Radix ten(10);
    CHECK(pn_to_digit_string(pn_from_natural(19, ten), 2) == "19");
    CHECK(pn_to_digit_string(pn_from_natural(0, ten), 4) == "0000");
    CHECK(pn_to_digit_string(pn_from_natural(0, ten)) == "0");
    CHECK(pn_to_digit_string(pn_from_natural(507060805070608ULL, ten), 16) ==
          "0507060805070608");
    // Non-decimal radices render as digit lists.
    CHECK(pn_to_digit_string(pn_from_natural(81003, Radix(uint64_t{1} << 16)), 2) ==
          "[1,15467]");
}

TEST_CASE("comparison is a total order on values") {
    const Radix ten(10);
    CHECK(pn_cmp(pn_from_natural(5, ten), pn_from_natural(7, ten)) < 0);
    CHECK(pn_cmp(pn_from_natural(7, ten), pn_from_natural(7, ten)) == 0);
    CHECK(pn_cmp(pn_from_natural(100, ten), pn_from_natural(99, ten)) > 0);
    CHECK(pn_is_zero(pn_from_natural(0, ten)));
}

TEST_CASE("value overflow is loud") {
    const Radix radix(uint64_t{1} << 32);
    const PackedNat big = PackedNat::from_digits(radix, {0, 0, 1});
    CHECK_THROWS_AS(pn_to_value(big), std::overflow_error);
    CHECK_THROWS_AS(pn_slot(big, 0, 3), std::overflow_error);
}

TEST_CASE("counter merge is field-wise") {
    OpCounter a{1, 2, 3, 4, 5};
    const OpCounter b{10, 20, 30, 40, 50};
    a += b;
    CHECK(a == OpCounter{11, 22, 33, 44, 55});
    CHECK(a.total() == 165);
    CHECK(a.arithmetic() == 33);
}

TEST_SUITE_END();
