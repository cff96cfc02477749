#include "kronmat/oracle.hpp"

#include <chrono>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "kronmat/kronmul.hpp"
#include "kronmat/matrix_io.hpp"

namespace kronmat {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::size_t round_up_to_field(std::size_t digits, std::size_t field) {
    return (digits + field - 1) / field * field;
}

std::string describe_case(std::size_t index, const MatrixNat& a, const MatrixNat& b,
                          uint64_t radix, const std::string& what) {
    std::ostringstream os;
    os << "case " << index << " (n=" << a.n << ", radix=" << radix << "): " << what
       << "\nlhs:\n"
       << render_matrix(a) << "rhs:\n"
       << render_matrix(b);
    return os.str();
}

} // namespace

MatrixNat schoolbook_matmul(const MatrixNat& a, const MatrixNat& b) {
    if (a.n != b.n) {
        throw DimensionMismatch("dimension mismatch: lhs " + std::to_string(a.n) +
                                ", rhs " + std::to_string(b.n));
    }
    MatrixNat c(a.n);
    for (std::size_t r = 0; r < a.n; ++r) {
        for (std::size_t col = 0; col < a.n; ++col) {
            unsigned __int128 acc = 0;
            for (std::size_t k = 0; k < a.n; ++k) {
                acc += static_cast<unsigned __int128>(a.at(r, k)) * b.at(k, col);
            }
            if (acc > std::numeric_limits<uint64_t>::max()) {
                throw std::overflow_error("matrix product entry exceeds 64 bits");
            }
            c.at(r, col) = static_cast<uint64_t>(acc);
        }
    }
    return c;
}

MatrixNat random_matrix(std::size_t n, uint64_t max_entry, RngState& rng) {
    MatrixNat m(n);
    for (auto& e : m.entries) {
        e = max_entry == std::numeric_limits<uint64_t>::max()
                ? rng.next()
                : rng.next_below(max_entry + 1);
    }
    return m;
}

SuiteResult run_equivalence_suite(const SuiteConfig& config) {
    SuiteResult result;
    RngState master(config.seed);
    bool first_ops = true;

    for (std::size_t i = 0; i < config.cases; ++i) {
        RngState rng(master.next());
        const std::size_t n =
            config.min_n + rng.next_below(config.max_n - config.min_n + 1);
        const uint64_t radix = config.radices[i % config.radices.size()];
        const MatrixNat a = random_matrix(n, config.max_entry, rng);
        const MatrixNat b = random_matrix(n, config.max_entry, rng);

        MmmConfig cfg;
        cfg.radix = Radix(radix);
        if (config.slot_width_delta != 0) {
            const std::size_t needed =
                compute_slot_width(n, a.max_entry(), b.max_entry(), cfg.radix);
            const long long forced =
                static_cast<long long>(needed) + config.slot_width_delta;
            cfg.slot_width = forced < 0 ? 0 : static_cast<std::size_t>(forced);
        }

        ++result.cases_run;
        try {
            MmmResult run = mmm(a, b, cfg);
            if (config.slot_width_delta < 0) {
                ++result.failures;
                result.failure_details.push_back(describe_case(
                    i, a, b, radix, "expected SlotOverflow, got a result"));
                continue;
            }
            if (config.inject_fault && i == 0) {
                run.product.at(0, 0) += 1;
            }

            const MatrixNat expected = schoolbook_matmul(a, b);
            if (run.product != expected) {
                ++result.failures;
                result.failure_details.push_back(
                    describe_case(i, a, b, radix, "product differs from schoolbook oracle"));
                continue;
            }

            const uint64_t n2 = static_cast<uint64_t>(n) * n;
            const OpCounter& ops = run.ops;
            const bool counts_ok = ops.big_mul == 1 && ops.big_add == n - 1 &&
                                   ops.shift == n - 1 && ops.encode_entry == 2 * n2 &&
                                   ops.decode_entry == n2 &&
                                   ops.total() == 3 * n2 + 2 * n - 1 &&
                                   ops.arithmetic() == n;
            if (!counts_ok) {
                ++result.failures;
                result.failure_details.push_back(
                    describe_case(i, a, b, radix, "operation counts off the formula"));
                continue;
            }
            if (first_ops) {
                result.min_total_ops = result.max_total_ops = ops.total();
                first_ops = false;
            } else {
                result.min_total_ops = std::min(result.min_total_ops, ops.total());
                result.max_total_ops = std::max(result.max_total_ops, ops.total());
            }
        } catch (const SlotOverflow&) {
            if (config.slot_width_delta < 0) {
                ++result.expected_overflows;
            } else {
                ++result.failures;
                result.failure_details.push_back(
                    describe_case(i, a, b, radix, "unexpected SlotOverflow"));
            }
        }
    }
    return result;
}

BenchReport run_benchmark(const BenchConfig& config) {
    BenchReport report;
    report.config = config;
    RngState master(config.seed);

    for (std::size_t n : config.sizes) {
        for (uint64_t radix_value : config.radices) {
            if (!config.force && n > config.max_plain_n) {
                throw MemoryCapExceeded(
                    "n=" + std::to_string(n) + " exceeds the desk-scale limit " +
                    std::to_string(config.max_plain_n) + " (pass force to override)");
            }
            RngState rng(master.next());
            const Radix radix(radix_value);
            const MatrixNat a = random_matrix(n, config.max_entry, rng);
            const MatrixNat b = random_matrix(n, config.max_entry, rng);

            const std::size_t p =
                compute_slot_width(n, a.max_entry(), b.max_entry(), radix);
            const uint64_t n4 = static_cast<uint64_t>(n) * n * n * n;
            if (!config.force && n4 * p > config.digit_cap) {
                throw MemoryCapExceeded("operand of " + std::to_string(n4 * p) +
                                        " digits exceeds the cap of " +
                                        std::to_string(config.digit_cap) +
                                        " (pass force to override)");
            }
            const SlotLayout layout{n, p, radix};
            validate_layout(layout, a, b);

            BenchCase bc;
            bc.n = n;
            bc.radix = radix_value;
            bc.slot_width = p;
            OpCounter ctr;

            auto t = std::chrono::steady_clock::now();
            const PackedNat lhs = encode_lhs(a, layout, ctr);
            const PackedNat rhs = encode_rhs(b, layout, ctr);
            bc.seconds.encode = seconds_since(t);

            t = std::chrono::steady_clock::now();
            const PackedNat x = packed_product(lhs, rhs, ctr);
            bc.seconds.multiply = seconds_since(t);

            t = std::chrono::steady_clock::now();
            const PackedNat y = shifted_sum(x, layout, ctr);
            bc.seconds.sum = seconds_since(t);

            t = std::chrono::steady_clock::now();
            const MatrixNat c = decode(y, layout, ctr);
            bc.seconds.decode = seconds_since(t);

            bc.lhs_digits = round_up_to_field(lhs.digit_count(), layout.lhs_stride());
            bc.rhs_digits = round_up_to_field(rhs.digit_count(), layout.rhs_stride());
            bc.lhs_tail_nonzero = a.entries.back() != 0;
            bc.rhs_tail_nonzero = b.entries[b.n * b.n - 1] != 0;
            if (bc.lhs_tail_nonzero && bc.lhs_digits != n4 * p) {
                throw std::runtime_error("lhs encoding width " +
                                         std::to_string(bc.lhs_digits) +
                                         " violates the n^4*p digit-length law");
            }
            bc.ops = ctr;

            bc.oracle_match = c == schoolbook_matmul(a, b);
            if (!bc.oracle_match) {
                throw std::runtime_error("benchmark oracle mismatch at n=" +
                                         std::to_string(n) + ", radix=" +
                                         std::to_string(radix_value) +
                                         ", seed=" + std::to_string(config.seed));
            }
            report.cases.push_back(bc);
        }
    }
    return report;
}

nlohmann::json bench_report_json(const BenchReport& report) {
    nlohmann::json config{
        {"sizes", report.config.sizes},
        {"max_entry", report.config.max_entry},
        {"radices", report.config.radices},
        {"seed", report.config.seed},
    };
    nlohmann::json cases = nlohmann::json::array();
    for (const BenchCase& bc : report.cases) {
        cases.push_back(nlohmann::json{
            {"n", bc.n},
            {"radix", bc.radix},
            {"slot_width", bc.slot_width},
            {"lhs_digits", bc.lhs_digits},
            {"rhs_digits", bc.rhs_digits},
            {"lhs_tail_nonzero", bc.lhs_tail_nonzero},
            {"rhs_tail_nonzero", bc.rhs_tail_nonzero},
            {"ops",
             {{"big_mul", bc.ops.big_mul},
              {"big_add", bc.ops.big_add},
              {"shift", bc.ops.shift},
              {"encode_entry", bc.ops.encode_entry},
              {"decode_entry", bc.ops.decode_entry},
              {"total", bc.ops.total()}}},
            {"oracle_match", bc.oracle_match},
            {"times",
             {{"encode_seconds", bc.seconds.encode},
              {"multiply_seconds", bc.seconds.multiply},
              {"sum_seconds", bc.seconds.sum},
              {"decode_seconds", bc.seconds.decode}}},
        });
    }
    return nlohmann::json{{"version", 1}, {"config", config}, {"cases", cases}};
}

} // namespace kronmat
