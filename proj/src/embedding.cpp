#include "harmonic_codes/embedding.hpp"

#include <cmath>
#include <string>

#include "harmonic_codes/errors.hpp"
#include "harmonic_codes/harmonics.hpp"
#include "parallel.hpp"

namespace harmonic_codes {

EmbeddedPoint embed_degree2(const LatticeCode& code, std::size_t index) {
  const std::size_t n = code.ambient_dim();
  if (n < 2) throw DimensionError("embed_degree2: ambient dimension must be >= 2");
  const IntVector& x = code.point(index);
  const std::int64_t norm = code.norm_sq_scaled();
  const Rational shift = rat(1, static_cast<std::int64_t>(n));
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational v = rat(x[i] * x[j], norm);
      if (i == j) v -= shift;
      m.set(i, j, v);
    }
  }
  return EmbeddedPoint{std::move(m), index, 1};
}

Rational normalized_inner(const EmbeddedPoint& a, const EmbeddedPoint& b) {
  Rational v = frobenius_inner(a.matrix, b.matrix) / frobenius_inner(a.matrix, a.matrix);
  return a.sign * b.sign < 0 ? -v : v;
}

EmbeddedCode::EmbeddedCode(std::uint64_t harmonic_dim, std::vector<EmbeddedPoint> points, unsigned threads)
    : harmonic_dim_(harmonic_dim), points_(std::move(points)) {
  if (points_.empty()) throw StructureError("embedded code has no points");
  const std::size_t n = points_.size();
  const std::size_t order = points_.front().matrix.order();
  for (const auto& p : points_) {
    if (p.matrix.order() != order) throw DimensionError("embedded points have different matrix orders");
    if (p.sign != 1 && p.sign != -1) throw StructureError("embedded point sign must be +1 or -1");
  }
  std::vector<Rational> self(n);
  detail::parallel_for(n, threads, [&](std::size_t i) {
    self[i] = frobenius_inner(points_[i].matrix, points_[i].matrix);
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (self[i] != self.front()) throw StructureError("embedded points are not equinorm");
  }
  const Rational norm = self.front();
  if (norm.is_zero()) throw StructureError("embedded point with zero matrix");

  gram_ = Matrix(n, n);
  detail::parallel_for(n, threads, [&](std::size_t i) {
    gram_(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v = frobenius_inner(points_[i].matrix, points_[j].matrix) / norm;
      if (points_[i].sign != points_[j].sign) v = -v;
      gram_(i, j) = v;
      gram_(j, i) = v;
    }
  });
}

EmbeddedCode build_code(const LatticeCode& roots, unsigned threads) {
  const LatticeCode reps = select_antipodal_representatives(roots);
  std::vector<EmbeddedPoint> points;
  points.reserve(2 * reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) points.push_back(embed_degree2(reps, i));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    EmbeddedPoint flipped = points[i];
    flipped.sign = -1;
    points.push_back(std::move(flipped));
  }
  const int d = static_cast<int>(roots.ambient_dim()) - 1;
  return EmbeddedCode(harmonic_dimension(d, 2), std::move(points), threads);
}

std::vector<double> flatten_coordinates(const EmbeddedPoint& p) {
  const std::size_t n = p.matrix.order();
  std::vector<double> out;
  out.reserve(n * (n + 1) / 2 - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(std::sqrt(2.0) * p.matrix(i, j).to_double());
  }
  for (std::size_t m = 1; m < n; ++m) {
    // Exact numerator, one rounding at the end.
    Rational acc;
    for (std::size_t i = 0; i < m; ++i) acc += p.matrix(i, i);
    acc -= Rational(static_cast<std::int64_t>(m)) * p.matrix(m, m);
    out.push_back(acc.to_double() / std::sqrt(static_cast<double>(m * (m + 1))));
  }
  const double norm = std::sqrt(frobenius_inner(p.matrix, p.matrix).to_double());
  const double scale = p.sign / norm;
  for (auto& c : out) c *= scale;
  return out;
}

}  // namespace harmonic_codes
