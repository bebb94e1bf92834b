#include "harmonic_codes/analyzer.hpp"

#include <string>

#include "harmonic_codes/errors.hpp"
#include "harmonic_codes/harmonics.hpp"

namespace harmonic_codes {

namespace {

void check_values(const std::set<Rational>& values) {
  for (const auto& v : values) {
    if (v < -1 || v > 1) throw DomainError("inner product value " + v.str() + " outside [-1, 1]");
  }
}

bool is_trivial(const Rational& v) { return v == 1 || v == -1; }

}  // namespace

std::vector<ScanResult> constant_modulus_scan(const std::set<Rational>& values, int d, int k_min, int k_max) {
  check_values(values);
  if (d < 2) throw DomainError("constant_modulus_scan: d must be >= 2, got " + std::to_string(d));
  if (k_min < 1 || k_max < k_min) throw DomainError("constant_modulus_scan: empty or invalid k range");
  std::vector<ScanResult> out;
  for (int k = k_min; k <= k_max; ++k) {
    const GegenbauerPoly p = gegenbauer(d, k);
    ScanResult r;
    r.d = d;
    r.k = k;
    r.harmonic_dim = harmonic_dimension(d, k);
    std::set<Rational> moduli;
    for (const auto& v : values) {
      Rational image = evaluate(p, v);
      if (!is_trivial(v)) moduli.insert(abs(image));
      r.image_values.emplace(v, std::move(image));
    }
    r.constant_modulus = moduli.size() == 1;
    if (r.constant_modulus) r.modulus = *moduli.begin();
    out.push_back(std::move(r));
  }
  return out;
}

CandidateParameters candidate_parameters(const std::set<Rational>& values, int d, int k, std::uint64_t n_points) {
  const ScanResult scan = constant_modulus_scan(values, d, k, k).front();
  CandidateParameters c;
  c.harmonic_dim = scan.harmonic_dim;
  c.n_points = n_points;
  bool any = false;
  for (const auto& [v, image] : scan.image_values) {
    if (is_trivial(v)) continue;
    if (!any || abs(image) > c.coherence) c.coherence = abs(image);
    any = true;
  }
  if (!any) throw EmptyDomainError("candidate_parameters: no non-antipodal inner product values");
  c.bound = quadratic_bound(n_points, scan.harmonic_dim);
  c.constant_modulus = scan.constant_modulus;
  c.meets_bound = c.bound.exact() && c.coherence == *c.bound.value;
  return c;
}

nlohmann::ordered_json to_json(const ScanResult& r) {
  nlohmann::ordered_json j;
  j["d"] = r.d;
  j["k"] = r.k;
  j["ambient_dim"] = r.harmonic_dim;
  nlohmann::ordered_json image = nlohmann::ordered_json::object();
  for (const auto& [v, g] : r.image_values) image[v.str()] = g.str();
  j["image"] = image;
  j["constant_modulus"] = r.constant_modulus;
  j["modulus"] = r.modulus ? nlohmann::ordered_json(r.modulus->str()) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json to_json(const CandidateParameters& c) {
  nlohmann::ordered_json j;
  j["ambient_dim"] = c.harmonic_dim;
  j["n_points"] = c.n_points;
  j["coherence"] = c.coherence.str();
  j["bound"] = c.bound.str();
  j["constant_modulus"] = c.constant_modulus;
  j["optimal_antipodal"] = c.meets_bound;
  return j;
}

}  // namespace harmonic_codes
