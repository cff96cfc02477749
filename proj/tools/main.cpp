// kronmat - multiply natural matrices through one packed multiplication,
// print walkthrough traces, run oracle suites and stage-timed benchmarks,
// and multiply polynomials by the same packing.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kronmat/error.hpp"
#include "kronmat/kronmul.hpp"
#include "kronmat/matrix_io.hpp"
#include "kronmat/oracle.hpp"
#include "kronmat/polymul.hpp"

namespace {

using namespace kronmat;

constexpr int kExitError = 1; // domain errors: dimensions, slot bounds, caps
constexpr int kExitUsage = 2; // I/O, parse, and command-line problems

void print_ops(std::ostream& os, const OpCounter& ops) {
    os << "big_mul " << ops.big_mul << '\n'
       << "big_add " << ops.big_add << '\n'
       << "shift " << ops.shift << '\n'
       << "encode_entry " << ops.encode_entry << '\n'
       << "decode_entry " << ops.decode_entry << '\n'
       << "total " << ops.total() << '\n';
}

nlohmann::json ops_json(const OpCounter& ops) {
    return {{"big_mul", ops.big_mul},     {"big_add", ops.big_add},
            {"shift", ops.shift},         {"encode_entry", ops.encode_entry},
            {"decode_entry", ops.decode_entry}, {"total", ops.total()}};
}

nlohmann::json matrix_json(const MatrixNat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.n; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.n; ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    return rows;
}

std::vector<uint64_t> parse_coeff_list(const std::string& text) {
    std::vector<uint64_t> coeffs;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw ParseError("empty coefficient in '" + text + "'");
        if (tok[0] == '-') throw ParseError("coefficients must be naturals, got '" + tok + "'");
        try {
            std::size_t used = 0;
            coeffs.push_back(std::stoull(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad coefficient '" + tok + "'");
        }
    }
    return coeffs;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            sizes.push_back(std::stoull(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ParseError("bad size '" + tok + "'");
        }
    }
    return sizes;
}

struct MultiplyOpts {
    std::string lhs_path, rhs_path;
    uint64_t radix = 10;
    std::optional<std::size_t> slot_width;
    bool count_ops = false;
    bool json = false;
    std::string mode = "template";
};

int run_multiply(const MultiplyOpts& opt) {
    const MatrixNat a = parse_matrix_file(opt.lhs_path);
    const MatrixNat b = parse_matrix_file(opt.rhs_path);

    MmmConfig cfg;
    cfg.radix = Radix(opt.radix);
    cfg.slot_width = opt.slot_width;

    MatrixNat product;
    OpCounter ops;
    std::size_t used_width = 0;
    if (opt.mode == "cascade-literal") {
        std::cerr << "warning: cascade-literal rebinds the accumulation operand and "
                     "returns wrong products for n >= 3\n";
        product = mmm_cascade_literal(a, b, cfg, ops);
        used_width = cfg.slot_width
                         ? *cfg.slot_width
                         : compute_slot_width(a.n, a.max_entry(), b.max_entry(), cfg.radix);
    } else {
        MmmResult res = mmm(a, b, cfg);
        product = std::move(res.product);
        ops = res.ops;
        used_width = res.layout.slot_width;
    }

    if (opt.json) {
        nlohmann::json out{{"version", 1},
                           {"n", product.n},
                           {"radix", opt.radix},
                           {"slot_width", used_width},
                           {"mode", opt.mode},
                           {"result", matrix_json(product)}};
        if (opt.count_ops) out["ops"] = ops_json(ops);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << render_matrix(product);
        if (opt.count_ops) print_ops(std::cout, ops);
    }
    return 0;
}

struct TraceOpts {
    std::string lhs_path, rhs_path;
    uint64_t radix = 10;
    std::optional<std::size_t> slot_width;
};

int run_trace(const TraceOpts& opt) {
    if (opt.radix != 10) {
        throw ParseError("trace renders decimal walkthroughs; --radix must stay 10");
    }
    const MatrixNat a = parse_matrix_file(opt.lhs_path);
    const MatrixNat b = parse_matrix_file(opt.rhs_path);
    const std::size_t p =
        opt.slot_width ? *opt.slot_width
                       : compute_slot_width(a.n, a.max_entry(), b.max_entry(), Radix(10));

    const TraceReport report = trace_illustration(a, b, p);
    std::cout << "n " << report.n << '\n'
              << "slot-width " << report.slot_width << '\n'
              << "lhs " << report.lhs_string << '\n'
              << "rhs " << report.rhs_string << '\n'
              << "product " << report.product_string << '\n';
    for (std::size_t k = 0; k < report.additions.size(); ++k) {
        std::cout << "add " << report.additions[k].addend << '\n'
                  << "sum " << report.additions[k].partial_sum << '\n';
    }
    std::cout << "final " << report.final_string << '\n'
              << "slots " << report.marked_string << '\n'
              << "result\n"
              << render_matrix(report.decoded);
    return 0;
}

struct VerifyOpts {
    std::size_t cases = 1000;
    std::size_t max_n = 8;
    uint64_t max_entry = 1'000'000;
    uint64_t radix = 0; // 0 = the default radix set
    uint64_t seed = 1;
    bool inject_fault = false;
};

int run_verify(const VerifyOpts& opt) {
    SuiteConfig cfg;
    cfg.cases = opt.cases;
    cfg.max_n = opt.max_n;
    cfg.max_entry = opt.max_entry;
    cfg.seed = opt.seed;
    cfg.inject_fault = opt.inject_fault;
    if (opt.radix != 0) cfg.radices = {opt.radix};

    const SuiteResult result = run_equivalence_suite(cfg);
    std::cout << "cases " << result.cases_run << '\n';
    std::ostringstream radices;
    for (std::size_t i = 0; i < cfg.radices.size(); ++i) {
        if (i) radices << ',';
        radices << cfg.radices[i];
    }
    std::cout << "n " << cfg.min_n << ".." << cfg.max_n << '\n'
              << "max-entry " << cfg.max_entry << '\n'
              << "radices " << radices.str() << '\n'
              << "seed " << cfg.seed << '\n'
              << "ops-per-case " << result.min_total_ops << ".." << result.max_total_ops
              << '\n'
              << "failures " << result.failures << '\n';
    for (const auto& detail : result.failure_details) std::cerr << detail << '\n';
    std::cout << (result.passed() ? "PASS" : "FAIL") << '\n';
    return result.passed() ? 0 : kExitError;
}

struct BenchOpts {
    std::string sizes = "2,4,8";
    uint64_t radix = uint64_t{1} << 32;
    uint64_t max_entry = 1'000'000;
    uint64_t seed = 1;
    std::string json_out;
    bool force = false;
};

int run_bench(const BenchOpts& opt) {
    BenchConfig cfg;
    cfg.sizes = parse_size_list(opt.sizes);
    cfg.max_entry = opt.max_entry;
    cfg.radices = {opt.radix};
    cfg.seed = opt.seed;
    cfg.force = opt.force;

    const BenchReport report = run_benchmark(cfg);
    for (const BenchCase& bc : report.cases) {
        std::cout << "n=" << bc.n << " radix=" << bc.radix << " p=" << bc.slot_width
                  << " lhs_digits=" << bc.lhs_digits << " rhs_digits=" << bc.rhs_digits
                  << " encode=" << bc.seconds.encode << "s multiply=" << bc.seconds.multiply
                  << "s sum=" << bc.seconds.sum << "s decode=" << bc.seconds.decode
                  << "s ops=" << bc.ops.total()
                  << " oracle=" << (bc.oracle_match ? "ok" : "MISMATCH") << '\n';
    }
    if (!opt.json_out.empty()) {
        std::ofstream out(opt.json_out);
        if (!out) throw ParseError("cannot write '" + opt.json_out + "'");
        out << bench_report_json(report).dump(2) << '\n';
    }
    return 0;
}

struct PolymulOpts {
    std::string lhs, rhs;
    uint64_t radix = 10;
    bool count_ops = false;
};

int run_polymul(const PolymulOpts& opt) {
    PolyNat f{parse_coeff_list(opt.lhs)};
    PolyNat g{parse_coeff_list(opt.rhs)};

    OpCounter ops;
    const PolyNat product = kron_poly_mul(f, g, Radix(opt.radix), ops);
    if (product.is_zero()) {
        std::cout << "0\n";
    } else {
        for (std::size_t k = 0; k < product.coeffs.size(); ++k) {
            if (k) std::cout << ',';
            std::cout << product.coeffs[k];
        }
        std::cout << '\n';
    }
    if (opt.count_ops) print_ops(std::cout, ops);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"packed matrix and polynomial multiplication"};
    app.require_subcommand(1);

    MultiplyOpts mul_opt;
    std::size_t mul_width = 0;
    auto* mul = app.add_subcommand("multiply", "multiply two matrix files");
    mul->add_option("lhs", mul_opt.lhs_path, "left matrix file")->required();
    mul->add_option("rhs", mul_opt.rhs_path, "right matrix file")->required();
    mul->add_option("--radix", mul_opt.radix, "digit base (default 10)");
    auto* mul_width_opt = mul->add_option("--slot-width", mul_width,
                                          "digits per slot (validated before use)");
    mul->add_flag("--count-ops", mul_opt.count_ops, "print the operation counter");
    mul->add_flag("--json", mul_opt.json, "emit JSON instead of the matrix format");
    mul->add_option("--mode", mul_opt.mode, "template | cascade-literal")
        ->check(CLI::IsMember({"template", "cascade-literal"}));

    TraceOpts trace_opt;
    std::size_t trace_width = 0;
    auto* trace = app.add_subcommand("trace", "print the step-by-step decimal walkthrough");
    trace->add_option("lhs", trace_opt.lhs_path, "left matrix file")->required();
    trace->add_option("rhs", trace_opt.rhs_path, "right matrix file")->required();
    trace->add_option("--radix", trace_opt.radix, "must stay 10 for traces");
    auto* trace_width_opt =
        trace->add_option("--slot-width", trace_width, "digits per slot");

    VerifyOpts verify_opt;
    auto* verify = app.add_subcommand("verify", "run the oracle equivalence suite");
    verify->add_option("--cases", verify_opt.cases, "number of random cases");
    verify->add_option("--max-n", verify_opt.max_n, "largest matrix dimension");
    verify->add_option("--max-entry", verify_opt.max_entry, "largest entry value");
    verify->add_option("--radix", verify_opt.radix, "restrict to one radix");
    verify->add_option("--seed", verify_opt.seed, "rng seed");
    verify->add_flag("--inject-fault", verify_opt.inject_fault)->group("");

    BenchOpts bench_opt;
    auto* bench = app.add_subcommand("bench", "time the pipeline stages");
    bench->add_option("--sizes", bench_opt.sizes, "comma-separated dimensions");
    bench->add_option("--radix", bench_opt.radix, "digit base (default 2^32)");
    bench->add_option("--max-entry", bench_opt.max_entry, "largest entry value");
    bench->add_option("--seed", bench_opt.seed, "rng seed");
    bench->add_option("--json-out", bench_opt.json_out, "write the JSON report here");
    bench->add_flag("--force", bench_opt.force, "bypass the desk-scale guard");

    PolymulOpts poly_opt;
    auto* poly = app.add_subcommand("polymul", "multiply two coefficient lists");
    poly->add_option("lhs", poly_opt.lhs, "comma-separated coefficients")->required();
    poly->add_option("rhs", poly_opt.rhs, "comma-separated coefficients")->required();
    poly->add_option("--radix", poly_opt.radix, "digit base (default 10)");
    poly->add_flag("--count-ops", poly_opt.count_ops, "print the operation counter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (mul_width_opt->count() > 0) mul_opt.slot_width = mul_width;
    if (trace_width_opt->count() > 0) trace_opt.slot_width = trace_width;

    try {
        if (mul->parsed()) return run_multiply(mul_opt);
        if (trace->parsed()) return run_trace(trace_opt);
        if (verify->parsed()) return run_verify(verify_opt);
        if (bench->parsed()) return run_bench(bench_opt);
        if (poly->parsed()) return run_polymul(poly_opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return 0;
}
