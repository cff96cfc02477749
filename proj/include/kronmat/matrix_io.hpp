#pragma once
// matrix_io.hpp - the text matrix format: first line n, then n lines of n
// whitespace-separated decimal naturals. parse(render(m)) == m.

#include <istream>
#include <string>

#include "kronmat/matrix.hpp"

namespace kronmat {

// Throws ParseError on negative tokens, ragged rows, trailing garbage, or a
// dimension outside [1, 4096].
MatrixNat parse_matrix(std::istream& in);

// Throws ParseError when the file cannot be opened.
MatrixNat parse_matrix_file(const std::string& path);

std::string render_matrix(const MatrixNat& m);

} // namespace kronmat
