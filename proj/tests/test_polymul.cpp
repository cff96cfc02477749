#include "doctest.h"

#include <vector>

#include "kronmat/oracle.hpp"
#include "kronmat/polymul.hpp"

using namespace kronmat;

namespace {

PolyNat poly(std::vector<uint64_t> coeffs) { return PolyNat{std::move(coeffs)}; }

PolyNat random_poly(RngState& rng, std::size_t max_terms, uint64_t max_coeff) {
    PolyNat f;
    const std::size_t terms = rng.next_below(max_terms) + 1;
    f.coeffs.resize(terms);
    for (auto& c : f.coeffs) c = rng.next_below(max_coeff + 1);
    f.trim();
    return f;
}

} // namespace

TEST_SUITE_BEGIN("polymul");

TEST_CASE("canonical form trims trailing zeros") {
    PolyNat f = poly({3, 10, 8, 0, 0});
    f.trim();
    CHECK(f == poly({3, 10, 8}));
    PolyNat z = poly({0, 0});
    z.trim();
    CHECK(z.is_zero());
}

TEST_CASE("slot width covers the convolution bound") {
    // min(2,2) * 2 * 4 = 16 needs two decimal digits.
    CHECK(poly_slot_width(poly({1, 2}), poly({3, 4}), Radix(10)) == 2);
    CHECK(poly_slot_width(poly({1}), poly({1}), Radix(10)) == 1);
    CHECK_THROWS_AS(poly_slot_width(poly({}), poly({1}), Radix(10)),
                    std::invalid_argument);
}

TEST_CASE("the packed walkthrough: (1+2z)(3+4z)") {
    OpCounter ctr;
    const PolyNat product = kron_poly_mul(poly({1, 2}), poly({3, 4}), Radix(10), ctr);
    CHECK(product == poly({3, 10, 8}));
    // One packed multiplication, no additions, 2+2 encodes, 3 decodes.
    CHECK(ctr == OpCounter{1, 0, 0, 4, 3});
}

TEST_CASE("identity and constants") {
    OpCounter ctr;
    const PolyNat f = poly({9, 0, 4, 7});
    CHECK(kron_poly_mul(f, poly({1}), Radix(10), ctr) == f);
    CHECK(kron_poly_mul(poly({5}), poly({7}), Radix(10), ctr) == poly({35}));
}

TEST_CASE("zero inputs give the zero polynomial with no operations") {
    OpCounter ctr;
    CHECK(kron_poly_mul(poly({}), poly({1, 2}), Radix(10), ctr).is_zero());
    CHECK(kron_poly_mul(poly({1, 2}), poly({0, 0}), Radix(10), ctr).is_zero());
    CHECK(ctr.total() == 0);
}

TEST_CASE("naive convolution oracle") {
    CHECK(naive_convolution(poly({1, 2}), poly({3, 4})) == poly({3, 10, 8}));
    CHECK(naive_convolution(poly({1, 2}), poly({})).is_zero());
    CHECK(naive_convolution(poly({6}), poly({7})) == poly({42}));
}

TEST_CASE("packed multiplication equals the convolution") {
    RngState rng(101);
    const uint64_t radices[] = {10, 97, uint64_t{1} << 16};
    for (int t = 0; t < 150; ++t) {
        const PolyNat f = random_poly(rng, 65, 10'000);
        const PolyNat g = random_poly(rng, 65, 10'000);
        OpCounter ctr;
        const Radix radix(radices[t % 3]);
        const PolyNat fast = kron_poly_mul(f, g, radix, ctr);
        CHECK(fast == naive_convolution(f, g));
        if (!f.is_zero() && !g.is_zero()) {
            CHECK(ctr.big_mul == 1);
            CHECK(ctr.big_add == 0);
            CHECK(ctr.encode_entry == f.term_count() + g.term_count());
            CHECK(ctr.decode_entry == f.term_count() + g.term_count() - 1);
        }
    }
}

TEST_CASE("unequal lengths are fine") {
    OpCounter ctr;
    const PolyNat f = poly({1, 2, 3, 4, 5, 6, 7});
    const PolyNat g = poly({8, 9});
    CHECK(kron_poly_mul(f, g, Radix(10), ctr) == naive_convolution(f, g));
    CHECK(ctr.encode_entry == 9);
    CHECK(ctr.decode_entry == 8);
}

TEST_CASE("decoded slots stay below the slot modulus") {
    RngState rng(7);
    for (int t = 0; t < 50; ++t) {
        const PolyNat f = random_poly(rng, 40, 5000);
        const PolyNat g = random_poly(rng, 40, 5000);
        if (f.is_zero() || g.is_zero()) continue;
        const Radix radix(10);
        const std::size_t q = poly_slot_width(f, g, radix);
        unsigned __int128 modulus = 1;
        for (std::size_t i = 0; i < q; ++i) modulus *= radix.value();
        OpCounter ctr;
        for (uint64_t c : kron_poly_mul(f, g, radix, ctr).coeffs) {
            CHECK(static_cast<unsigned __int128>(c) < modulus);
        }
    }
}

TEST_SUITE_END();
