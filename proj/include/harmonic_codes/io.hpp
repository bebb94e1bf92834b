#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <variant>

#include "harmonic_codes/embedding.hpp"
#include "harmonic_codes/exact.hpp"
#include "harmonic_codes/lattice.hpp"

// Text formats. Malformed input raises IoError.
//
//   code file:   `ambient_dim N scale norm_sq_scaled`, then N rows of integers
//   exact Gram:  `N`, then N rows of N `p/q` tokens
//   float code:  `dim N float`, then N rows of 17-significant-digit floats
//   values:      one `p/q` token per line
namespace harmonic_codes::io {

void write_code(std::ostream& os, const LatticeCode& code);
LatticeCode read_code(std::istream& is);

void write_gram(std::ostream& os, const Matrix& gram);
Matrix read_gram(std::istream& is);

void write_float_code(std::ostream& os, const EmbeddedCode& code);

std::set<Rational> read_values(std::istream& is);

/// Either file kind, distinguished by the header token count (4 vs 1).
std::variant<LatticeCode, Matrix> read_code_or_gram(std::istream& is);

}  // namespace harmonic_codes::io
