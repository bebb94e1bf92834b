#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "harmonic_codes/exact.hpp"

namespace harmonic_codes {

using IntVector = std::vector<std::int64_t>;

/// Equinorm point set with integer coordinates. Stored coordinates are
/// `scale * x` for the true point x; normalized inner products are
/// `(p . q) / norm_sq_scaled` and therefore always rational.
class LatticeCode {
 public:
  /// Throws StructureError on empty input, ragged or zero vectors, unequal
  /// norms, or duplicate points.
  LatticeCode(std::size_t ambient_dim, std::int64_t scale, std::vector<IntVector> points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::int64_t scale() const { return scale_; }
  std::int64_t norm_sq_scaled() const { return norm_sq_scaled_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<IntVector>& points() const { return points_; }
  const IntVector& point(std::size_t i) const { return points_.at(i); }

  std::int64_t scaled_inner(std::size_t i, std::size_t j) const;
  Rational inner(std::size_t i, std::size_t j) const;

  /// True when -p is present for every point p.
  bool is_antipodal() const;

  bool operator==(const LatticeCode&) const = default;

 private:
  std::size_t ambient_dim_;
  std::int64_t scale_;
  std::int64_t norm_sq_scaled_ = 0;
  std::vector<IntVector> points_;
};

/// Normalized inner product value -> count over ordered distinct pairs.
using Spectrum = std::map<Rational, std::uint64_t>;

std::int64_t dot(const IntVector& a, const IntVector& b);
IntVector negate(IntVector v);

/// The 240 minimal vectors of E8 in the even coordinate system scaled by 2:
/// permutations of (+-2, +-2, 0^6) and (+-1)^8 with an even number of -1.
/// Sorted lexicographically.
LatticeCode generate_e8_roots();

/// One point from each pair {p, -p}: the lexicographically larger one, in
/// the input order. Throws AntipodalityError naming an unpaired point.
LatticeCode select_antipodal_representatives(const LatticeCode& code);

Spectrum spectrum(const LatticeCode& code);

std::uint64_t spectrum_total(const Spectrum& s);

}  // namespace harmonic_codes
