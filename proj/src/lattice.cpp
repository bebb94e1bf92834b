#include "harmonic_codes/lattice.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <string>

#include "harmonic_codes/errors.hpp"

namespace harmonic_codes {

namespace {

std::string format_vector(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector negate(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

LatticeCode::LatticeCode(std::size_t ambient_dim, std::int64_t scale, std::vector<IntVector> points)
    : ambient_dim_(ambient_dim), scale_(scale), points_(std::move(points)) {
  if (ambient_dim_ == 0) throw StructureError("ambient dimension must be positive");
  if (scale_ <= 0) throw StructureError("scale must be positive");
  if (points_.empty()) throw StructureError("code has no points");
  for (const auto& p : points_) {
    if (p.size() != ambient_dim_) {
      throw StructureError("point " + format_vector(p) + " has length " + std::to_string(p.size()) +
                           ", expected " + std::to_string(ambient_dim_));
    }
  }
  norm_sq_scaled_ = dot(points_.front(), points_.front());
  if (norm_sq_scaled_ == 0) throw StructureError("zero vector in code");
  for (const auto& p : points_) {
    if (dot(p, p) != norm_sq_scaled_) {
      throw StructureError("point " + format_vector(p) + " breaks the common squared norm " +
                           std::to_string(norm_sq_scaled_));
    }
  }
  std::set<IntVector> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw StructureError("duplicate point " + format_vector(p));
  }
}

std::int64_t LatticeCode::scaled_inner(std::size_t i, std::size_t j) const {
  return dot(points_.at(i), points_.at(j));
}

Rational LatticeCode::inner(std::size_t i, std::size_t j) const {
  return rat(scaled_inner(i, j), norm_sq_scaled_);
}

bool LatticeCode::is_antipodal() const {
  const std::set<IntVector> all(points_.begin(), points_.end());
  return std::all_of(points_.begin(), points_.end(),
                     [&](const IntVector& p) { return all.contains(negate(p)); });
}

LatticeCode generate_e8_roots() {
  constexpr std::size_t dim = 8;
  std::vector<IntVector> roots;
  roots.reserve(240);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (std::int64_t si : {-2, 2}) {
        for (std::int64_t sj : {-2, 2}) {
          IntVector v(dim, 0);
          v[i] = si;
          v[j] = sj;
          roots.push_back(std::move(v));
        }
      }
    }
  }
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    IntVector v(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) {
      if (mask & (1u << i)) v[i] = -1;
    }
    roots.push_back(std::move(v));
  }
  std::sort(roots.begin(), roots.end());
  return LatticeCode(dim, 2, std::move(roots));
}

LatticeCode select_antipodal_representatives(const LatticeCode& code) {
  const std::set<IntVector> all(code.points().begin(), code.points().end());
  std::vector<IntVector> kept;
  for (const auto& p : code.points()) {
    const IntVector q = negate(p);
    if (!all.contains(q)) {
      throw AntipodalityError("code is not antipodal: no partner for " + format_vector(p));
    }
    if (p > q) kept.push_back(p);
  }
  return LatticeCode(code.ambient_dim(), code.scale(), std::move(kept));
}

Spectrum spectrum(const LatticeCode& code) {
  std::map<std::int64_t, std::uint64_t> scaled;
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = 0; j < code.size(); ++j) {
      if (i != j) ++scaled[code.scaled_inner(i, j)];
    }
  }
  Spectrum out;
  for (const auto& [value, count] : scaled) out[rat(value, code.norm_sq_scaled())] += count;
  return out;
}

std::uint64_t spectrum_total(const Spectrum& s) {
  std::uint64_t total = 0;
  for (const auto& [value, count] : s) total += count;
  return total;
}

}  // namespace harmonic_codes
