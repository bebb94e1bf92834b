#include "harmonic_codes/codes.hpp"

#include <map>
#include <sstream>

#include "harmonic_codes/errors.hpp"
#include "harmonic_codes/harmonics.hpp"

namespace harmonic_codes {

GramView::GramView(Matrix entries, std::optional<std::vector<std::size_t>> antipode)
    : entries_(std::move(entries)), antipode_(std::move(antipode)) {
  const std::size_t n = entries_.rows();
  if (n == 0 || entries_.cols() != n) throw StructureError("Gram matrix must be square and nonempty");
  if (!entries_.is_symmetric()) throw StructureError("Gram matrix is not symmetric");
  for (std::size_t i = 0; i < n; ++i) {
    if (entries_(i, i) != 1) throw StructureError("Gram diagonal entry " + std::to_string(i) + " is not 1");
  }
  if (!antipode_) return;
  const auto& a = *antipode_;
  if (a.size() != n) throw StructureError("antipode map has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] >= n || a[i] == i || a[a[i]] != i) {
      throw StructureError("antipode map is not a fixed-point-free involution at " + std::to_string(i));
    }
    if (entries_(i, a[i]) != -1) {
      throw StructureError("antipodal entry (" + std::to_string(i) + "," + std::to_string(a[i]) + ") is not -1");
    }
  }
}

GramView GramView::detect_antipodes(Matrix entries) {
  const std::size_t n = entries.rows();
  std::vector<std::size_t> pair(n, n);
  bool complete = entries.cols() == n;
  for (std::size_t i = 0; complete && i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || entries(i, j) != -1) continue;
      if (pair[i] != n) {
        complete = false;
        break;
      }
      pair[i] = j;
    }
    if (pair[i] == n) complete = false;
  }
  for (std::size_t i = 0; complete && i < n; ++i) complete = pair[pair[i]] == i;
  if (!complete) return GramView(std::move(entries));
  return GramView(std::move(entries), std::move(pair));
}

GramView gram_from_embedded(const EmbeddedCode& code) {
  const auto& pts = code.points();
  const std::size_t n = pts.size();
  std::vector<std::size_t> pair(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && pts[i].sign == -pts[j].sign && pts[i].source_index == pts[j].source_index &&
          pts[i].matrix == pts[j].matrix) {
        pair[i] = j;
        break;
      }
    }
    if (pair[i] == n) return GramView(code.gram());
  }
  return GramView(code.gram(), std::move(pair));
}

GramView gram_from_lattice(const LatticeCode& code) {
  Matrix m(code.size(), code.size());
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = 0; j < code.size(); ++j) m(i, j) = code.inner(i, j);
  }
  return GramView::detect_antipodes(std::move(m));
}

Rational max_coherence(const GramView& g, bool include_antipodal) {
  const auto& anti = g.antipode();
  bool any = false;
  Rational best;
  for (std::size_t i = 0; i < g.n(); ++i) {
    for (std::size_t j = i + 1; j < g.n(); ++j) {
      if (!include_antipodal && anti && (*anti)[i] == j) continue;
      const Rational v = abs(g(i, j));
      if (!any || v > best) best = v;
      any = true;
    }
  }
  if (!any) throw EmptyDomainError("max_coherence: no admissible pair of points");
  return best;
}

Spectrum gram_spectrum(const GramView& g) {
  Spectrum s;
  for (std::size_t i = 0; i < g.n(); ++i) {
    for (std::size_t j = 0; j < g.n(); ++j) {
      if (i != j) ++s[g(i, j)];
    }
  }
  return s;
}

FrameCheck frame_bound_check(const GramView& g, std::uint64_t dim) {
  if (dim < 1) throw DomainError("frame_bound_check: dim must be >= 1");
  // Sum by distinct value; the Gram of a structured code has few of them.
  std::map<Rational, std::uint64_t> counts;
  for (std::size_t i = 0; i < g.n(); ++i) {
    for (std::size_t j = 0; j < g.n(); ++j) ++counts[g(i, j)];
  }
  FrameCheck out;
  for (const auto& [v, c] : counts) out.frame_sum += v * v * Rational(c);
  const Rational n(g.n());
  out.frame_bound = n * n / Rational(dim);
  out.satisfied = out.frame_sum >= out.frame_bound;
  return out;
}

std::string QuadraticBound::str() const { return value ? value->str() : "sqrt(" + radicand.str() + ")"; }

QuadraticBound quadratic_bound(std::uint64_t n, std::uint64_t dim) {
  if (n % 2 != 0) throw AntipodalityError("quadratic_bound: antipodal codes have an even number of points");
  if (n < 4) throw DomainError("quadratic_bound: need n >= 4");
  if (dim < 1) throw DomainError("quadratic_bound: dim must be >= 1");
  Rational r = (Rational(n) / Rational(dim) - 2) / (Rational(n) - 2);
  if (r.sign() < 0) r = 0;
  QuadraticBound out{r, std::nullopt};
  Rational root;
  if (exact_sqrt(r, root)) out.value = root;
  return out;
}

DesignResult design_strength(const GramView& g, int d_sphere, int t_max) {
  if (t_max < 1) throw DomainError("design_strength: t_max must be >= 1");
  std::map<Rational, std::uint64_t> counts;
  for (std::size_t i = 0; i < g.n(); ++i) {
    for (std::size_t j = 0; j < g.n(); ++j) ++counts[g(i, j)];
  }
  DesignResult out;
  bool holding = true;
  for (int k = 1; k <= t_max; ++k) {
    const GegenbauerPoly p = gegenbauer(d_sphere, k);
    Rational sum;
    for (const auto& [v, c] : counts) sum += evaluate(p, v) * Rational(c);
    holding = holding && sum.is_zero();
    if (holding) out.strength = k;
    out.residuals.push_back(std::move(sum));
  }
  return out;
}

CodeReport certify(const GramView& g, std::uint64_t ambient_dim, int t_max) {
  if (!g.antipode()) throw AntipodalityError("certify: code is not antipodal (unpaired point)");
  CodeReport r;
  r.ambient_dim = ambient_dim;
  r.n_points = g.n();
  r.coherence_a = max_coherence(g);
  r.spectrum = gram_spectrum(g);
  r.lower_bound_a = quadratic_bound(g.n(), ambient_dim);
  const FrameCheck fc = frame_bound_check(g, ambient_dim);
  r.frame_sum = fc.frame_sum;
  r.frame_bound = fc.frame_bound;
  r.frame_satisfied = fc.satisfied;
  const DesignResult dr = design_strength(g, static_cast<int>(ambient_dim) - 1, t_max);
  r.design_strength = dr.strength;
  r.design_residuals = dr.residuals;
  r.optimal_antipodal = r.lower_bound_a.exact() && r.coherence_a == *r.lower_bound_a.value;
  return r;
}

CodeReport certify(const EmbeddedCode& code, int t_max) {
  return certify(gram_from_embedded(code), code.harmonic_dim(), t_max);
}

nlohmann::ordered_json to_json(const Spectrum& s) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [v, c] : s) j[v.str()] = c;
  return j;
}

nlohmann::ordered_json to_json(const CodeReport& r) {
  nlohmann::ordered_json j;
  j["ambient_dim"] = r.ambient_dim;
  j["n_points"] = r.n_points;
  j["coherence"] = r.coherence_a.str();
  j["spectrum"] = to_json(r.spectrum);
  j["bound"] = r.lower_bound_a.str();
  j["frame_sum"] = r.frame_sum.str();
  j["frame_bound"] = r.frame_bound.str();
  j["design_strength"] = r.design_strength;
  j["optimal_antipodal"] = r.optimal_antipodal;
  return j;
}

std::string to_text(const CodeReport& r) {
  std::ostringstream os;
  os << "ambient_dim: " << r.ambient_dim << '\n'
     << "n_points: " << r.n_points << '\n'
     << "coherence: " << r.coherence_a << '\n'
     << "spectrum: " << to_json(r.spectrum).dump() << '\n'
     << "bound: " << r.lower_bound_a.str() << '\n'
     << "frame_sum: " << r.frame_sum << '\n'
     << "frame_bound: " << r.frame_bound << '\n'
     << "design_strength: " << r.design_strength << '\n'
     << "optimal_antipodal: " << (r.optimal_antipodal ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace harmonic_codes
