#pragma once

#include <string>

#include "csum/matrix.hpp"

// Plain-text matrix documents: a group spec header ("int" or "zmod <k>")
// followed by one line per row of whitespace-separated decimal entries,
// with "*" for a blank cell.
namespace csum::io {

PartialMatrix parse_partial(const std::string& text);

// As parse_partial, but a "*" token is a parse error.
DenseMatrix parse_dense(const std::string& text);

std::string print(const DenseMatrix& a);
std::string print(const PartialMatrix& a);

// One completion per output line: row-major entries, space separated.
std::string print_flat(const DenseMatrix& a);

} // namespace csum::io
