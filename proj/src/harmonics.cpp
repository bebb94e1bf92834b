#include "harmonic_codes/harmonics.hpp"

#include <string>

#include "harmonic_codes/errors.hpp"

namespace harmonic_codes {

namespace {

using Poly = std::vector<Rational>;

// a * t * p + b * q
Poly recurrence_step(const Rational& a, const Poly& p, const Rational& b, const Poly& q) {
  Poly out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[i + 1] += a * p[i];
  for (std::size_t i = 0; i < q.size(); ++i) out[i] += b * q[i];
  return out;
}

Rational horner(const Poly& coeffs, const Rational& t) {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

std::uint64_t harmonic_dimension(int d, int k) {
  if (d < 1) throw DomainError("harmonic_dimension: d must be >= 1, got " + std::to_string(d));
  if (k < 0) throw DomainError("harmonic_dimension: k must be >= 0, got " + std::to_string(k));
  if (k == 0) return 1;
  BigInt binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d + k - 1), static_cast<unsigned long>(k));
  const BigInt numer = BigInt(2 * k + d - 1) * binom;
  const BigInt denom = BigInt(k + d - 1);
  if (numer % denom != 0) throw DomainError("harmonic_dimension: non-integral value");  // unreachable
  const BigInt value = numer / denom;
  if (!value.fits_ulong_p()) throw DomainError("harmonic_dimension: value exceeds 64 bits");
  return value.get_ui();
}

GegenbauerPoly::GegenbauerPoly(int d, int k, std::vector<Rational> coeffs)
    : d_(d), k_(k), coeffs_(std::move(coeffs)) {
  if (k_ < 0 || coeffs_.size() != static_cast<std::size_t>(k_) + 1) {
    throw DomainError("GegenbauerPoly: expected k + 1 coefficients");
  }
}

Rational GegenbauerPoly::operator()(const Rational& t) const { return horner(coeffs_, t); }

GegenbauerPoly gegenbauer(int d, int k) {
  if (d < 1) throw DomainError("gegenbauer: d must be >= 1, got " + std::to_string(d));
  if (k < 0) throw DomainError("gegenbauer: k must be >= 0, got " + std::to_string(k));

  Poly prev{Rational(1)};
  if (k == 0) return GegenbauerPoly(d, 0, prev);

  Poly cur;
  if (d == 1) {
    // T_k = 2t T_{k-1} - T_{k-2}, already T_k(1) = 1.
    cur = {Rational(0), Rational(1)};
    for (int n = 2; n <= k; ++n) {
      Poly next = recurrence_step(2, cur, -1, prev);
      prev = std::move(cur);
      cur = std::move(next);
    }
    return GegenbauerPoly(d, k, std::move(cur));
  }

  const Rational lambda = rat(d - 1, 2);
  cur = {Rational(0), 2 * lambda};
  for (int n = 2; n <= k; ++n) {
    // n C_n = 2t (n - 1 + lambda) C_{n-1} - (n - 2 + 2 lambda) C_{n-2}
    const Rational a = 2 * (Rational(n - 1) + lambda) / n;
    const Rational b = -(Rational(n - 2) + 2 * lambda) / n;
    Poly next = recurrence_step(a, cur, b, prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  const Rational at_one = horner(cur, 1);
  for (auto& c : cur) c /= at_one;
  return GegenbauerPoly(d, k, std::move(cur));
}

Rational evaluate(const GegenbauerPoly& p, const Rational& t) { return p(t); }

}  // namespace harmonic_codes
