#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "harmonic_codes/errors.hpp"
#include "harmonic_codes/lattice.hpp"
#include "oracles.hpp"

using namespace harmonic_codes;

TEST_CASE("E8 roots match brute-force enumeration") {
  const LatticeCode roots = generate_e8_roots();
  CHECK(roots.size() == 240);
  CHECK(roots.ambient_dim() == 8);
  CHECK(roots.scale() == 2);
  CHECK(roots.norm_sq_scaled() == 8);
  auto expected = oracle::e8_by_enumeration();
  std::sort(expected.begin(), expected.end());
  CHECK(roots.points() == expected);
  CHECK(std::is_sorted(roots.points().begin(), roots.points().end()));
}

TEST_CASE("E8 root shapes") {
  const LatticeCode roots = generate_e8_roots();
  const std::set<IntVector> all(roots.points().begin(), roots.points().end());
  CHECK(all.contains(IntVector{2, 2, 0, 0, 0, 0, 0, 0}));
  CHECK(all.contains(IntVector{1, 1, 1, 1, 1, 1, 1, 1}));
  CHECK_FALSE(all.contains(IntVector{1, -1, 1, 1, 1, 1, 1, 1}));
  CHECK(roots.is_antipodal());
}

TEST_CASE("E8 per-root inner product histogram") {
  const LatticeCode roots = generate_e8_roots();
  const std::map<std::int64_t, int> expected{{8, 1}, {4, 56}, {0, 126}, {-4, 56}, {-8, 1}};
  for (std::size_t i = 0; i < roots.size(); ++i) {
    std::map<std::int64_t, int> h;
    for (std::size_t j = 0; j < roots.size(); ++j) ++h[roots.scaled_inner(i, j)];
    REQUIRE(h == expected);
  }
}

TEST_CASE("E8 spectrum") {
  const Spectrum s = spectrum(generate_e8_roots());
  const Spectrum expected{{-1, 240}, {rat(-1, 2), 13440}, {0, 30240}, {rat(1, 2), 13440}};
  CHECK(s == expected);
  CHECK(spectrum_total(s) == 240u * 239u);
  // Symmetric apart from -1, whose partner +1 only occurs on the diagonal.
  for (const auto& [value, count] : s)
    if (value != -1) CHECK(s.at(-value) == count);
}

TEST_CASE("antipodal representatives") {
  const LatticeCode roots = generate_e8_roots();
  const LatticeCode reps = select_antipodal_representatives(roots);
  CHECK(reps.size() == 120);
  const std::set<IntVector> kept(reps.points().begin(), reps.points().end());
  for (const auto& p : reps.points()) {
    CHECK_FALSE(kept.contains(negate(p)));
    CHECK(p > negate(p));
  }
  for (const auto& [value, count] : spectrum(reps)) {
    CHECK((value == 0 || value == rat(1, 2) || value == rat(-1, 2)));
  }

  // Idempotent on its output closed under negation.
  std::vector<IntVector> closed = reps.points();
  for (const auto& p : reps.points()) closed.push_back(negate(p));
  CHECK(select_antipodal_representatives(LatticeCode(8, 2, closed)) == reps);
}

TEST_CASE("small codes") {
  const LatticeCode pair(2, 1, {{1, 0}, {-1, 0}});
  const LatticeCode rep = select_antipodal_representatives(pair);
  CHECK(rep.points() == std::vector<IntVector>{{1, 0}});
  CHECK(spectrum(pair) == Spectrum{{-1, 2}});

  const LatticeCode broken(2, 1, {{1, 0}, {-1, 0}, {0, 1}});
  CHECK_FALSE(broken.is_antipodal());
  CHECK_THROWS_AS(select_antipodal_representatives(broken), AntipodalityError);
  try {
    select_antipodal_representatives(broken);
  } catch (const AntipodalityError& e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
}

TEST_CASE("LatticeCode invariants are enforced") {
  CHECK_THROWS_AS(LatticeCode(2, 1, {}), StructureError);
  CHECK_THROWS_AS(LatticeCode(2, 1, {{1, 0}, {1, 1}}), StructureError);
  CHECK_THROWS_AS(LatticeCode(2, 1, {{1, 0}, {1, 0}}), StructureError);
  CHECK_THROWS_AS(LatticeCode(2, 1, {{1, 0, 0}}), StructureError);
  CHECK_THROWS_AS(LatticeCode(2, 0, {{1, 0}}), StructureError);
  CHECK_THROWS_AS(LatticeCode(2, 1, {{0, 0}}), StructureError);
}

TEST_CASE("E8 scaled inner products are in {-8,-4,0,4,8}") {
  const LatticeCode roots = generate_e8_roots();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = 0; j < roots.size(); ++j) {
      const auto v = roots.scaled_inner(i, j);
      REQUIRE((v == -8 || v == -4 || v == 0 || v == 4 || v == 8));
    }
}
