#pragma once

#include <cstdint>
#include <vector>

#include "harmonic_codes/exact.hpp"

namespace harmonic_codes {

/// dim H_k^d = (2k + d - 1) / (k + d - 1) * C(d + k - 1, k), the dimension of
/// degree-k spherical harmonics on S^d. Returns 1 for k = 0. Throws
/// DomainError for d < 1 or if the value does not fit in 64 bits.
std::uint64_t harmonic_dimension(int d, int k);

/// Gegenbauer polynomial for S^d normalized so that g(1) = 1.
class GegenbauerPoly {
 public:
  GegenbauerPoly(int d, int k, std::vector<Rational> coeffs);

  int d() const { return d_; }
  int k() const { return k_; }
  /// Constant term first; size k + 1.
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& t) const;

 private:
  int d_;
  int k_;
  std::vector<Rational> coeffs_;
};

/// Ultraspherical C_k^lambda with lambda = (d - 1) / 2, built by the
/// three-term recurrence and divided by C_k(1). For d = 1 (lambda = 0) the
/// normalized limit is the Chebyshev polynomial T_k. Throws DomainError for
/// d < 1 or k < 0.
GegenbauerPoly gegenbauer(int d, int k);

/// Horner evaluation.
Rational evaluate(const GegenbauerPoly& p, const Rational& t);

}  // namespace harmonic_codes
