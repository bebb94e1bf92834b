#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "harmonic_codes/embedding.hpp"
#include "harmonic_codes/exact.hpp"
#include "harmonic_codes/lattice.hpp"

namespace harmonic_codes {

/// A code seen through its Gram matrix: symmetric, unit diagonal, with an
/// optional antipode pairing i -> j (fixed-point-free involution, entry -1).
class GramView {
 public:
  /// Throws StructureError when the invariants do not hold.
  explicit GramView(Matrix entries, std::optional<std::vector<std::size_t>> antipode = std::nullopt);

  /// Pairs i with the unique j != i whose entry is -1. The pairing is left
  /// empty when some row has zero or several such entries.
  static GramView detect_antipodes(Matrix entries);

  std::size_t n() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const std::optional<std::vector<std::size_t>>& antipode() const { return antipode_; }

 private:
  Matrix entries_;
  std::optional<std::vector<std::size_t>> antipode_;
};

/// Pairing from sign-flip partners (same matrix, opposite sign). No pairing
/// when any point lacks a partner.
GramView gram_from_embedded(const EmbeddedCode& code);

/// Normalized Gram of a lattice code, antipodes detected.
GramView gram_from_lattice(const LatticeCode& code);

/// Max |g(i,j)| over distinct i, j, skipping antipodal pairs unless
/// `include_antipodal`. Throws EmptyDomainError when no pair qualifies.
Rational max_coherence(const GramView& g, bool include_antipodal = false);

/// Distribution of Gram entries over ordered distinct pairs.
Spectrum gram_spectrum(const GramView& g);

struct FrameCheck {
  Rational frame_sum;    // sum of all squared entries, diagonal included
  Rational frame_bound;  // n^2 / dim
  bool satisfied = false;
};

FrameCheck frame_bound_check(const GramView& g, std::uint64_t dim);

/// Smallest coherence an antipodal n-point code in R^dim can have:
/// a_min^2 = max(0, (n/dim - 2) / (n - 2)).
struct QuadraticBound {
  Rational radicand;
  std::optional<Rational> value;  // set when the radicand is a rational square

  bool exact() const { return value.has_value(); }
  /// `p/q`, or `sqrt(p/q)` when inexact.
  std::string str() const;
};

/// Throws AntipodalityError for odd n and DomainError for n < 4 or dim < 1.
QuadraticBound quadratic_bound(std::uint64_t n, std::uint64_t dim);

struct DesignResult {
  int strength = 0;
  std::vector<Rational> residuals;  // residuals[k - 1] = sum_{i,j} g_k(G(i,j))
};

/// Largest t <= t_max with vanishing Gegenbauer moment sums for every
/// 1 <= k <= t on S^d_sphere.
DesignResult design_strength(const GramView& g, int d_sphere, int t_max);

struct CodeReport {
  std::uint64_t ambient_dim = 0;
  std::size_t n_points = 0;
  Rational coherence_a;
  Spectrum spectrum;
  QuadraticBound lower_bound_a;
  Rational frame_sum;
  Rational frame_bound;
  bool frame_satisfied = false;
  int design_strength = 0;
  std::vector<Rational> design_residuals;
  bool optimal_antipodal = false;

  /// Every certificate holds: tight-or-satisfied frame bound and optimality.
  bool all_pass() const { return frame_satisfied && optimal_antipodal; }
};

/// Throws AntipodalityError when the code has no complete antipode pairing.
CodeReport certify(const GramView& g, std::uint64_t ambient_dim, int t_max = 5);
CodeReport certify(const EmbeddedCode& code, int t_max = 5);

/// `key: value` lines in fixed key order.
std::string to_text(const CodeReport& r);
nlohmann::ordered_json to_json(const CodeReport& r);
nlohmann::ordered_json to_json(const Spectrum& s);

}  // namespace harmonic_codes
