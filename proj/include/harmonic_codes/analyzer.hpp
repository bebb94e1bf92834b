#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "harmonic_codes/codes.hpp"
#include "harmonic_codes/exact.hpp"

namespace harmonic_codes {

/// Gegenbauer image of an inner-product value set at one degree.
struct ScanResult {
  int d = 0;
  int k = 0;
  std::uint64_t harmonic_dim = 0;
  std::map<Rational, Rational> image_values;
  bool constant_modulus = false;
  std::optional<Rational> modulus;
};

/// For each k in [k_min, k_max], evaluates g_k^d on every value. The modulus
/// test ignores +-1 (self and antipodal products). Throws DomainError for
/// values outside [-1, 1], d < 2 or an empty k range.
std::vector<ScanResult> constant_modulus_scan(const std::set<Rational>& values, int d, int k_min, int k_max);

/// Parameters the embedding would produce without building anything.
struct CandidateParameters {
  std::uint64_t harmonic_dim = 0;
  std::uint64_t n_points = 0;
  Rational coherence;  // max |g_k^d| over the non-antipodal values
  QuadraticBound bound;
  bool constant_modulus = false;
  bool meets_bound = false;
};

CandidateParameters candidate_parameters(const std::set<Rational>& values, int d, int k, std::uint64_t n_points);

nlohmann::ordered_json to_json(const ScanResult& r);
nlohmann::ordered_json to_json(const CandidateParameters& c);

}  // namespace harmonic_codes
