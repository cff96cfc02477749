#include "kronmat/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "kronmat/error.hpp"

namespace kronmat {

namespace {

constexpr std::size_t kMaxDimension = 4096;

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

uint64_t parse_natural(const std::string& tok, const char* what) {
    if (tok.empty() || tok[0] == '-' || tok[0] == '+') {
        throw ParseError(std::string(what) + " must be a decimal natural, got '" + tok + "'");
    }
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(std::string(what) + " must be a decimal natural, got '" + tok + "'");
    }
    return value;
}

} // namespace

MatrixNat parse_matrix(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty matrix input");
    const auto header = split_tokens(line);
    if (header.size() != 1) throw ParseError("first line must hold the dimension only");
    const uint64_t n = parse_natural(header[0], "dimension");
    if (n < 1 || n > kMaxDimension) {
        throw ParseError("dimension must lie in [1, " + std::to_string(kMaxDimension) +
                         "], got " + header[0]);
    }

    MatrixNat m(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < n; ++r) {
        if (!std::getline(in, line)) {
            throw ParseError("expected " + std::to_string(n) + " rows, got " +
                             std::to_string(r));
        }
        const auto row = split_tokens(line);
        if (row.size() != n) {
            throw ParseError("row " + std::to_string(r + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(n));
        }
        for (std::size_t c = 0; c < n; ++c) {
            m.at(r, c) = parse_natural(row[c], "entry");
        }
    }
    while (std::getline(in, line)) {
        if (!split_tokens(line).empty()) {
            throw ParseError("trailing content after row " + std::to_string(n));
        }
    }
    return m;
}

MatrixNat parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_matrix(in);
}

std::string render_matrix(const MatrixNat& m) {
    std::ostringstream os;
    os << m.n << '\n';
    for (std::size_t r = 0; r < m.n; ++r) {
        for (std::size_t c = 0; c < m.n; ++c) {
            if (c) os << ' ';
            os << m.at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace kronmat
