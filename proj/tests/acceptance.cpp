// End-to-end acceptance checks. One PASS/FAIL line per criterion; exits
// nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "harmonic_codes/analyzer.hpp"
#include "harmonic_codes/codes.hpp"
#include "harmonic_codes/embedding.hpp"
#include "harmonic_codes/harmonics.hpp"
#include "harmonic_codes/lattice.hpp"
#include "oracles.hpp"

using namespace harmonic_codes;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> check;
};

#define EXPECT(cond)                          \
  do {                                        \
    if (!(cond)) {                            \
      detail = "failed: " #cond;              \
      return false;                           \
    }                                         \
  } while (0)

const LatticeCode& e8() {
  static const LatticeCode roots = generate_e8_roots();
  return roots;
}

const EmbeddedCode& e8_code() {
  static const EmbeddedCode code = build_code(e8());
  return code;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

bool ac1_e8_generation(std::string& detail) {
  const auto t0 = Clock::now();
  const LatticeCode roots = generate_e8_roots();
  const double elapsed = seconds_since(t0);
  EXPECT(roots.size() == 240);
  for (const auto& p : roots.points()) EXPECT(dot(p, p) == 8);
  EXPECT(roots.is_antipodal());
  const std::map<std::int64_t, int> expected{{8, 1}, {4, 56}, {0, 126}, {-4, 56}, {-8, 1}};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    std::map<std::int64_t, int> h;
    for (std::size_t j = 0; j < roots.size(); ++j) ++h[roots.scaled_inner(i, j)];
    EXPECT(h == expected);
  }
  EXPECT(elapsed < 1.0);
  detail = "240 roots, histogram {8:1,4:56,0:126,-4:56,-8:1}, " + std::to_string(elapsed) + " s";
  return true;
}

bool ac2_dimension(std::string& detail) {
  EXPECT(harmonic_dimension(7, 2) == 35);
  for (int d = 1; d <= 30; ++d) EXPECT(harmonic_dimension(d, 1) == static_cast<std::uint64_t>(d + 1));
  detail = "dim H_2^7 = 35; dim H_1^d = d+1 for d <= 30";
  return true;
}

bool ac3_gegenbauer(std::string& detail) {
  EXPECT((gegenbauer(7, 2).coeffs() == std::vector<Rational>{rat(-1, 7), 0, rat(8, 7)}));
  for (int d = 2; d <= 30; ++d) {
    EXPECT((gegenbauer(d, 2).coeffs() == std::vector<Rational>{rat(-1, d), 0, rat(d + 1, d)}));
  }
  detail = "g_2^7 = 8/7 t^2 - 1/7; closed form for 2 <= d <= 30";
  return true;
}

bool ac4_construction(std::string& detail) {
  const auto t0 = Clock::now();
  const EmbeddedCode code = build_code(e8());
  const double elapsed = seconds_since(t0);
  EXPECT(code.size() == 240);
  EXPECT(code.harmonic_dim() == 35);
  const GramView g = gram_from_embedded(code);
  EXPECT(g.antipode().has_value());
  std::size_t minus_one = 0;
  for (std::size_t i = 0; i < 240; ++i) {
    for (std::size_t j = 0; j < 240; ++j) {
      if (i == j) continue;
      if (g(i, j) == -1) ++minus_one;
      if ((*g.antipode())[i] == j) continue;
      EXPECT(abs(g(i, j)) == rat(1, 7));
    }
  }
  EXPECT(minus_one == 240);
  EXPECT(elapsed < 5.0);
  detail = "N = 240 in dim 35, |off-diagonal| = 1/7, 240 entries = -1, " + std::to_string(elapsed) + " s";
  return true;
}

bool ac5_kernel_identity(std::string& detail) {
  const GegenbauerPoly g2 = gegenbauer(7, 2);
  std::vector<EmbeddedPoint> pts;
  for (std::size_t i = 0; i < e8().size(); ++i) pts.push_back(embed_degree2(e8(), i));
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (normalized_inner(pts[i], pts[j]) != evaluate(g2, e8().inner(i, j))) ++mismatches;
  EXPECT(mismatches == 0);
  detail = "57600 pairs, 0 discrepancies";
  return true;
}

bool ac6_optimality(std::string& detail) {
  const QuadraticBound b = quadratic_bound(240, 35);
  EXPECT(b.exact());
  EXPECT(*b.value == rat(1, 7));
  const FrameCheck fc = frame_bound_check(gram_from_embedded(e8_code()), 35);
  EXPECT(fc.frame_sum == rat(57600, 35));
  EXPECT(fc.frame_bound == rat(57600, 35));
  EXPECT(certify(e8_code()).optimal_antipodal);
  detail = "bound 1/7, frame_sum = frame_bound = 57600/35, optimal_antipodal = true";
  return true;
}

bool ac7_design(std::string& detail) {
  const DesignResult r = design_strength(gram_from_embedded(e8_code()), 34, 3);
  EXPECT(r.strength == 3);
  EXPECT((r.residuals == std::vector<Rational>{0, 0, 0}));
  detail = "strength 3, residuals 0 for k = 1, 2, 3";
  return true;
}

bool ac8_analyzer(std::string& detail) {
  const auto e8s = constant_modulus_scan({0, rat(1, 2), rat(-1, 2)}, 7, 2, 2).front();
  EXPECT(e8s.constant_modulus);
  EXPECT(*e8s.modulus == rat(1, 7));
  const auto leech = constant_modulus_scan({0, rat(1, 4), rat(-1, 4), rat(1, 2), rat(-1, 2)}, 23, 2, 2).front();
  EXPECT(!leech.constant_modulus);
  EXPECT(leech.harmonic_dim == 299);
  std::set<Rational> image;
  for (const auto& [v, g] : leech.image_values) image.insert(g);
  EXPECT((image == std::set<Rational>{rat(-1, 23), rat(1, 46), rat(5, 23)}));
  detail = "E8 spectrum constant 1/7 at d=7; Leech spectrum image {-1/23, 1/46, 5/23}, dim 299";
  return true;
}

bool ac9_properties(std::string& detail) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial % 5);
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 20);
    std::vector<std::vector<Rational>> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(oracle::random_rational_unit_vector(rng, dim));
    EXPECT(frame_bound_check(GramView(oracle::gram_of(vs)), dim).satisfied);
  }

  std::uniform_int_distribution<long> den(1, 50);
  for (int d = 1; d <= 30; ++d) {
    for (int k = 0; k <= 12; ++k) {
      const GegenbauerPoly g = gegenbauer(d, k);
      EXPECT(evaluate(g, 1) == 1);
      for (int s = 0; s < 5; ++s) {
        const long q = den(rng);
        const Rational t = rat(std::uniform_int_distribution<long>(-q, q)(rng), q);
        const Rational v = evaluate(g, t);
        EXPECT(evaluate(g, -t) == (k % 2 ? -v : v));
        EXPECT(abs(v) <= 1);
      }
    }
  }

  const EmbeddedCode& code = e8_code();
  std::vector<std::vector<double>> flat;
  for (const auto& p : code.points()) flat.push_back(flatten_coordinates(p));
  double worst = 0;
  for (std::size_t i = 0; i < flat.size(); ++i)
    for (std::size_t j = 0; j < flat.size(); ++j) {
      double s = 0;
      for (std::size_t c = 0; c < flat[i].size(); ++c) s += flat[i][c] * flat[j][c];
      worst = std::max(worst, std::abs(s - code.gram()(i, j).to_double()));
    }
  EXPECT(worst <= 1e-12);
  std::ostringstream os;
  os << "1000 frame cases; Gegenbauer up to (30,12); float export max error " << worst;
  detail = os.str();
  return true;
}

bool ac10_determinism(std::string& detail) {
  const std::string cli = HARMONIC_CODES_CLI_PATH;
  const std::string plain = "'" + cli + "' roots | '" + cli + "' build | '" + cli + "' certify";
  const std::string threaded =
      "'" + cli + "' roots | '" + cli + "' --threads 4 build | '" + cli + "' --threads 4 certify";
  int s1 = 0, s2 = 0, s3 = 0;
  const std::string a = capture(plain, s1);
  const std::string b = capture(plain, s2);
  const std::string c = capture(threaded, s3);
  EXPECT(s1 == 0 && s2 == 0 && s3 == 0);
  EXPECT(!a.empty());
  EXPECT(a == b);
  EXPECT(a == c);
  EXPECT(a.find("optimal_antipodal: true") != std::string::npos);
  detail = "three CLI pipeline runs byte-identical (" + std::to_string(a.size()) + " bytes)";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1 E8 generation", ac1_e8_generation},
      {"AC2 dimension formula", ac2_dimension},
      {"AC3 Gegenbauer polynomials", ac3_gegenbauer},
      {"AC4 (35, 240, 1/7) construction", ac4_construction},
      {"AC5 kernel identity", ac5_kernel_identity},
      {"AC6 optimality certificate", ac6_optimality},
      {"AC7 design strength", ac7_design},
      {"AC8 constant-modulus analyzer", ac8_analyzer},
      {"AC9 property suites", ac9_properties},
      {"AC10 CLI determinism", ac10_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name << " -- " << detail << '\n';
    failed += ok ? 0 : 1;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
