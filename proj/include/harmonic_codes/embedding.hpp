#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "harmonic_codes/exact.hpp"
#include "harmonic_codes/lattice.hpp"

namespace harmonic_codes {

/// Model of +-G_x in H_2^d: the traceless symmetric matrix
/// M_x = x x^T / |x|^2 - I / (d + 1), plus a sign flag for negated copies.
struct EmbeddedPoint {
  SymMatrix matrix;
  std::optional<std::size_t> source_index;
  int sign = 1;
};

/// Throws std::out_of_range for a bad index and DimensionError when the
/// ambient dimension is below 2.
EmbeddedPoint embed_degree2(const LatticeCode& code, std::size_t index);

/// sign_a * sign_b * <M_a, M_b> / <M_a, M_a>. Throws DimensionError on
/// order mismatch.
Rational normalized_inner(const EmbeddedPoint& a, const EmbeddedPoint& b);

/// Immutable signed point collection with its exact normalized Gram matrix.
class EmbeddedCode {
 public:
  /// All points must share one matrix order and one Frobenius self-norm.
  EmbeddedCode(std::uint64_t harmonic_dim, std::vector<EmbeddedPoint> points, unsigned threads = 1);

  std::uint64_t harmonic_dim() const { return harmonic_dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<EmbeddedPoint>& points() const { return points_; }
  const Matrix& gram() const { return gram_; }

 private:
  std::uint64_t harmonic_dim_;
  std::vector<EmbeddedPoint> points_;
  Matrix gram_;
};

/// Representatives (lattice rule) embedded with sign +1, followed by the
/// same representatives with sign -1. Propagates AntipodalityError.
EmbeddedCode build_code(const LatticeCode& roots, unsigned threads = 1);

/// Coordinates of sign * M / |M| in the orthonormal basis of traceless
/// symmetric matrices: sqrt(2) * M(i,j) for i < j (row-major), then the
/// diagonal chain diag(1,...,1,-m,0,...,0) / sqrt(m(m+1)) for m = 1..n-1.
/// Length n(n+1)/2 - 1.
std::vector<double> flatten_coordinates(const EmbeddedPoint& p);

}  // namespace harmonic_codes
