#pragma once
// oracle.hpp - ground-truth schoolbook algorithms, deterministic instance
// generation, the equivalence suite, and the stage-timed benchmark runner.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "kronmat/matrix.hpp"
#include "kronmat/packint.hpp"

namespace kronmat {

// splitmix64: state advances by the golden-gamma increment 0x9E3779B97F4A7C15
// and each output is finalized with the 0xBF58476D1CE4E5B9 /
// 0x94D049BB133111EB mixing constants. Identical seeds give identical
// streams on every platform.
struct RngState {
    uint64_t state = 0;

    explicit RngState(uint64_t seed) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, bound); plain modulo reduction, which is part
    // of the documented stream contract.
    uint64_t next_below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
};

// Conventional cubic product with exact natural arithmetic, independent of
// the packed path. Throws DimensionMismatch on unequal n and
// std::overflow_error if a result entry exceeds 2^64-1.
MatrixNat schoolbook_matmul(const MatrixNat& a, const MatrixNat& b);

// Entries uniform in [0, max_entry]; advances the rng deterministically.
MatrixNat random_matrix(std::size_t n, uint64_t max_entry, RngState& rng);

struct SuiteConfig {
    std::size_t min_n = 1;
    std::size_t max_n = 8;
    uint64_t max_entry = 1'000'000;
    std::vector<uint64_t> radices = {10, uint64_t{1} << 16, uint64_t{1} << 32};
    std::size_t cases = 1000;
    uint64_t seed = 1;
    // Nonzero offsets the validated slot width; a negative offset must raise
    // SlotOverflow, which the suite then counts as an expected-failure pass.
    int slot_width_delta = 0;
    // Verification hook: corrupts one computed entry so the suite proves it
    // catches mismatches.
    bool inject_fault = false;
};

struct SuiteResult {
    std::size_t cases_run = 0;
    std::size_t failures = 0;
    std::size_t expected_overflows = 0;
    uint64_t min_total_ops = 0;
    uint64_t max_total_ops = 0;
    std::vector<std::string> failure_details;

    bool passed() const noexcept { return failures == 0; }
};

// Random instances checked against the schoolbook oracle and the counter
// formulas total=3n^2+2n-1, arithmetic=n. Failing inputs are reproduced
// verbatim in the details.
SuiteResult run_equivalence_suite(const SuiteConfig& config);

struct BenchStageSeconds {
    double encode = 0;
    double multiply = 0;
    double sum = 0;
    double decode = 0;
};

struct BenchCase {
    std::size_t n = 0;
    uint64_t radix = 0;
    std::size_t slot_width = 0;
    // Occupied encoding widths: the normalized digit count rounded up to a
    // whole per-entry field (n^2*p for the lhs, p for the rhs), i.e. n^4*p
    // and n^2*p exactly when the respective last vector entry is nonzero.
    std::size_t lhs_digits = 0;
    std::size_t rhs_digits = 0;
    bool lhs_tail_nonzero = false;
    bool rhs_tail_nonzero = false;
    BenchStageSeconds seconds;
    OpCounter ops;
    bool oracle_match = false;
};

struct BenchConfig {
    std::vector<std::size_t> sizes;
    uint64_t max_entry = 1'000'000;
    std::vector<uint64_t> radices = {uint64_t{1} << 32};
    uint64_t seed = 1;
    // Desk-scale guard: operand size grows as n^4*p digits. force bypasses
    // both limits.
    bool force = false;
    std::size_t max_plain_n = 16;
    uint64_t digit_cap = uint64_t{1} << 24;
};

struct BenchReport {
    BenchConfig config;
    std::vector<BenchCase> cases;
};

// One case per (size, radix) pair. An oracle mismatch aborts with an error
// rather than emitting a report. Throws MemoryCapExceeded for oversized
// instances unless forced.
BenchReport run_benchmark(const BenchConfig& config);

// JSON schema {version, config, cases[...]}; timing lives under the per-case
// "times" object so determinism checks can drop it wholesale.
nlohmann::json bench_report_json(const BenchReport& report);

} // namespace kronmat
