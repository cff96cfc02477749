#pragma once
// matrix.hpp - dense square matrix of natural numbers, row-major.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace kronmat {

struct MatrixNat {
    std::size_t n = 0;
    std::vector<uint64_t> entries; // row-major, n*n values

    MatrixNat() = default;
    explicit MatrixNat(std::size_t dim) : n(dim), entries(dim * dim, 0) {}

    static MatrixNat identity(std::size_t dim) {
        MatrixNat m(dim);
        for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }

    uint64_t& at(std::size_t r, std::size_t c) { return entries[r * n + c]; }
    uint64_t at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }

    uint64_t max_entry() const {
        if (entries.empty()) return 0;
        return *std::max_element(entries.begin(), entries.end());
    }

    friend bool operator==(const MatrixNat&, const MatrixNat&) = default;
};

} // namespace kronmat
