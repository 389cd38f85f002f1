#include <doctest.h>

#include <cmath>
#include <random>

#include "jcxy/analytic_n4.hpp"
#include "jcxy/model.hpp"
#include "jcxy/spectral.hpp"
#include "helpers.hpp"

using namespace jcxy;
using jcxy::testing::expand_analytic;
using jcxy::testing::max_sorted_deviation;
using jcxy::testing::uniform_in;

TEST_CASE("branch multiplicities and labels") {
  const auto levels = levels_open_edge(0.7, 0.4);
  REQUIRE(levels.size() == 9);
  const int pattern[9] = {2, 4, 2, 4, 8, 4, 2, 4, 2};
  for (int i = 0; i < 9; ++i) {
    CHECK(levels[i].multiplicity == pattern[i]);
    CHECK(levels[i].multiplicity ==
          multiplicity_of_degeneracy_label(levels[i].branch_label.back()));
  }
  CHECK(levels[0].branch_label == "E1^D");
  CHECK(levels[4].branch_label == "E5^O");
}

TEST_CASE("levels at J=0 collapse to +-G and zero") {
  const auto levels = levels_open_edge(1.0, 0.0);
  const double expect[9] = {1, 1, 1, 0, 0, 0, -1, -1, -1};
  for (int i = 0; i < 9; ++i) CHECK(levels[i].energy == doctest::Approx(expect[i]).epsilon(1e-14));
}

TEST_CASE("levels at G=0 are the golden-ratio exchange values") {
  const auto levels = levels_open_edge(0.0, 1.0);
  const double sqrt5 = std::sqrt(5.0);
  CHECK(levels[0].energy == doctest::Approx(sqrt5).epsilon(1e-14));
  CHECK(levels[1].energy == doctest::Approx((1.0 + sqrt5) / 2.0).epsilon(1e-14));
  CHECK(levels[2].energy == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(levels[3].energy == doctest::Approx((sqrt5 - 1.0) / 2.0).epsilon(1e-14));
  CHECK(levels[4].energy == 0.0);
}

TEST_CASE("top branch at G=J=1 is 1+sqrt(3)") {
  CHECK(levels_open_edge(1.0, 1.0)[0].energy ==
        doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("mirror branches are exact negations") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const auto l = levels_open_edge(uniform_in(rng, -2, 2), uniform_in(rng, -2, 2));
    CHECK(l[5].energy == -l[3].energy);
    CHECK(l[6].energy == -l[2].energy);
    CHECK(l[7].energy == -l[1].energy);
    CHECK(l[8].energy == -l[0].energy);
  }
}

TEST_CASE("analytic levels match the eigensolver at sampled couplings") {
  {
    const auto eigs =
        eigen_symmetric(build_hamiltonian({4, Topology::Open, 1, 1.0, 1.0}).matrix);
    CHECK(max_sorted_deviation(eigs, expand_analytic(levels_open_edge(1.0, 1.0))) < 1e-10);
  }
  std::mt19937_64 rng(32);
  for (int rep = 0; rep < 25; ++rep) {
    const double g = uniform_in(rng, -2, 2), j = uniform_in(rng, -2, 2);
    const auto eigs = eigen_symmetric(build_hamiltonian({4, Topology::Open, 1, g, j}).matrix);
    CHECK(max_sorted_deviation(eigs, expand_analytic(levels_open_edge(g, j))) < 1e-8);
  }
}

TEST_CASE("second-site factored polynomial at pinned couplings") {
  SUBCASE("quartic at G=J=1") {
    const auto p = charpoly_open_second(1.0, 1.0);
    REQUIRE(p.factors.size() == 3);
    const auto& quartic = p.factors[1];
    CHECK(quartic.exponent == 2);
    const double expect[5] = {2, 0, -4, 0, 1};
    for (int k = 0; k <= 4; ++k) CHECK(quartic.coefficients[k] == expect[k]);
  }
  SUBCASE("octic at J=0 is E^2(E^2-1)^3") {
    const auto p = charpoly_open_second(1.0, 0.0);
    const auto& octic = p.factors[2];
    const double expect[9] = {0, 0, -1, 0, 3, 0, -3, 0, 1};
    for (int k = 0; k <= 8; ++k) CHECK(octic.coefficients[k] == expect[k]);
  }
  SUBCASE("quartic at G=0 has the golden-ratio roots") {
    const auto p = charpoly_open_second(0.0, 1.0);
    const auto& quartic = p.factors[1];
    const double expect[5] = {1, 0, -3, 0, 1};
    for (int k = 0; k <= 4; ++k) CHECK(quartic.coefficients[k] == expect[k]);
  }
  CHECK(charpoly_open_second(0.3, -1.2).total_degree() == 32);
}

TEST_CASE("closed-chain factored polynomial at pinned couplings") {
  const auto p = charpoly_closed(1.0, 1.0);
  REQUIRE(p.factors.size() == 4);
  CHECK(p.total_degree() == 32);

  const auto& pm_g = p.factors[1];
  CHECK(pm_g.coefficients[0] == -1.0);
  CHECK(pm_g.coefficients[2] == 1.0);
  CHECK(pm_g.exponent == 2);

  const auto& sextic = p.factors[3];
  const double expect[7] = {-10, 0, 39, 0, -14, 0, 1};
  for (int k = 0; k <= 6; ++k) CHECK(sextic.coefficients[k] == expect[k]);
}

TEST_CASE("closed quadratic branches") {
  {
    const auto [ep, em] = analytic_branch_closed_quadratic(1.0, 0.0);
    CHECK(ep == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(em == doctest::Approx(0.0).epsilon(1e-14));
  }
  {
    const auto [ep, em] = analytic_branch_closed_quadratic(0.0, 1.0);
    CHECK(ep == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(em == doctest::Approx(0.0).epsilon(1e-14));
  }
  {
    const auto [ep, em] = analytic_branch_closed_quadratic(1.0, 1.0);
    CHECK(ep == doctest::Approx(std::sqrt((5.0 + std::sqrt(17.0)) / 2.0)).epsilon(1e-14));
    CHECK(em == doctest::Approx(std::sqrt((5.0 - std::sqrt(17.0)) / 2.0)).epsilon(1e-14));
  }
}

TEST_CASE("roots_of_factored") {
  SUBCASE("the zero-level factor alone gives eight zeros") {
    FactoredCharPoly p;
    p.factors.push_back({{0.0, 0.0, 1.0}, 4});  // (E^2)^4
    const auto roots = roots_of_factored(p);
    REQUIRE(roots.size() == 8);
    for (const double r : roots) CHECK(r == 0.0);
  }
  SUBCASE("closed quartic factor at G=0 has roots {0, 0, +-2}") {
    FactoredCharPoly p;
    p.factors.push_back({charpoly_closed(0.0, 1.0).factors[2].coefficients, 1});
    const auto roots = roots_of_factored(p);
    REQUIRE(roots.size() == 4);
    CHECK(roots[0] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(roots[1] == 0.0);
    CHECK(roots[2] == 0.0);
    CHECK(roots[3] == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("closed-chain roots match the eigensolver at G=J=1") {
    const auto eigs = eigen_symmetric(build_hamiltonian({4, Topology::Closed, 1, 1.0, 1.0}).matrix);
    CHECK(max_sorted_deviation(eigs, roots_of_factored(charpoly_closed(1.0, 1.0))) < 1e-8);
  }
  SUBCASE("second-site roots at J=0; repeated roots carry ~eps^(1/3) scatter") {
    const auto roots = roots_of_factored(charpoly_open_second(1.0, 0.0));
    REQUIRE(roots.size() == 32);
    std::vector<double> expect;
    expect.insert(expect.end(), 8, -1.0);
    expect.insert(expect.end(), 16, 0.0);
    expect.insert(expect.end(), 8, 1.0);
    CHECK(max_sorted_deviation(roots, expect) < 1e-4);
  }
  SUBCASE("factors with odd powers are rejected") {
    FactoredCharPoly p;
    p.factors.push_back({{0.0, 1.0}, 8});  // plain E
    CHECK_THROWS_AS(roots_of_factored(p), std::invalid_argument);
  }
}

TEST_CASE("factored roots match the eigensolver at sampled couplings") {
  std::mt19937_64 rng(33);
  for (int rep = 0; rep < 25; ++rep) {
    const double g = uniform_in(rng, -2, 2), j = uniform_in(rng, -2, 2);
    const auto open2 = eigen_symmetric(build_hamiltonian({4, Topology::Open, 2, g, j}).matrix);
    CHECK(max_sorted_deviation(open2, roots_of_factored(charpoly_open_second(g, j))) < 1e-8);
    const auto closed = eigen_symmetric(build_hamiltonian({4, Topology::Closed, 3, g, j}).matrix);
    CHECK(max_sorted_deviation(closed, roots_of_factored(charpoly_closed(g, j))) < 1e-8);
  }
}

TEST_CASE("quartic factor differs from the edge-coupled branches by one sign") {
  std::mt19937_64 rng(34);
  for (int rep = 0; rep < 20; ++rep) {
    const double g = uniform_in(rng, -2, 2), j = uniform_in(rng, -2, 2);
    const auto p = charpoly_open_second(g, j);
    const auto& quartic = p.factors[1];
    const double disc_second =
        quartic.coefficients[2] * quartic.coefficients[2] - 4.0 * quartic.coefficients[0];
    const auto levels = levels_open_edge(g, j);
    const double e2 = levels[1].energy, e4 = levels[3].energy;
    const double disc_edge = (e2 * e2 - e4 * e4) * (e2 * e2 - e4 * e4);
    CHECK(disc_second ==
          doctest::Approx(disc_edge + 4.0 * g * g * j * j).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("non-finite couplings are rejected") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(levels_open_edge(inf, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(charpoly_open_second(0.0, inf), std::invalid_argument);
  CHECK_THROWS_AS(charpoly_closed(inf, inf), std::invalid_argument);
}
