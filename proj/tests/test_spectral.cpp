#include <doctest.h>

#include <cmath>
#include <random>

#include "jcxy/exact_poly.hpp"
#include "jcxy/model.hpp"
#include "jcxy/spectral.hpp"
#include "helpers.hpp"

using namespace jcxy;
using jcxy::testing::max_sorted_deviation;

TEST_CASE("eigen_symmetric on sigma_x") {
  const auto eigs = eigen_symmetric(generator(Generator::SigmaX).real_matrix());
  REQUIRE(eigs.size() == 2);
  CHECK(eigs[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eigs[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("single-excitation JC eigenvalues are +-G and 0") {
  const auto eigs = eigen_symmetric(build_hamiltonian({1, Topology::Open, 1, 1.0, 0.0}).matrix);
  const std::vector<double> expect = {-1.0, 0.0, 0.0, 1.0};
  CHECK(max_sorted_deviation(eigs, expect) < 1e-14);
}

TEST_CASE("pure exchange limit: top level is sqrt(5) J") {
  const auto eigs = eigen_symmetric(build_hamiltonian({4, Topology::Open, 1, 0.0, 1.0}).matrix);
  CHECK(eigs.back() == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("eigen_symmetric validates input") {
  DenseRealMatrix m(2, 2);
  m << 0, 1, 0.5, 0;
  CHECK_THROWS_AS(eigen_symmetric(m), std::invalid_argument);
  CHECK_THROWS_AS(eigen_symmetric(DenseRealMatrix::Identity(2, 2), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(eigen_symmetric(DenseRealMatrix::Identity(2, 3)), std::invalid_argument);
}

TEST_CASE("cluster_degeneracies merges within tolerance") {
  const std::vector<double> eigs = {-1.0, -1.0 + 1e-12, 0.0, 1.0};
  const Spectrum s = cluster_degeneracies(eigs, 1e-9);
  REQUIRE(s.levels.size() == 3);
  CHECK(s.levels[0].energy == doctest::Approx(-1.0).epsilon(1e-11));
  CHECK(s.levels[0].multiplicity == 2);
  CHECK(s.levels[1].energy == 0.0);
  CHECK(s.levels[1].multiplicity == 1);
  CHECK(s.levels[2].energy == 1.0);
  CHECK(s.levels[2].multiplicity == 1);
  CHECK(s.eigenvalues == eigs);
}

TEST_CASE("cluster_degeneracies rejects unsorted input and bad tolerances") {
  CHECK_THROWS_AS(cluster_degeneracies({1.0, 0.0}, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(cluster_degeneracies({0.0, 1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("degeneracy patterns at a generic coupling") {
  const Spectrum open_edge = spectrum_of({4, Topology::Open, 1, 1.0, 0.3}, kDefaultConvTol, 1e-9);
  REQUIRE(open_edge.levels.size() == 9);
  const int pattern[9] = {2, 4, 2, 4, 8, 4, 2, 4, 2};
  for (int i = 0; i < 9; ++i) CHECK(open_edge.levels[i].multiplicity == pattern[i]);

  const Spectrum closed = spectrum_of({4, Topology::Closed, 1, 1.0, 0.3}, kDefaultConvTol, 1e-9);
  REQUIRE(closed.levels.size() == 13);
  CHECK(jcxy::testing::has_level(closed, 0.0, 1e-9, 8));
}

TEST_CASE("spectrum_of examples") {
  const Spectrum j0 = spectrum_of({4, Topology::Open, 1, 1.0, 0.0});
  REQUIRE(j0.levels.size() == 3);
  CHECK(j0.levels[0].multiplicity == 8);
  CHECK(j0.levels[1].multiplicity == 16);
  CHECK(j0.levels[2].multiplicity == 8);
  CHECK(j0.levels[0].energy == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(j0.levels[1].energy == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(j0.config.has_value());

  const Spectrum closed = spectrum_of({4, Topology::Closed, 1, 0.7, 1.3});
  CHECK(jcxy::testing::has_level(closed, 0.7, 1e-9, 2));
  CHECK(jcxy::testing::has_level(closed, -0.7, 1e-9, 2));

  const Spectrum second = spectrum_of({4, Topology::Open, 2, 1.0, 1.0});
  for (const auto& level : second.levels) {
    if (std::abs(level.energy) > 1e-9) {
      CHECK(level.multiplicity == 2);
    } else {
      CHECK(level.multiplicity == 8);
    }
  }
}

TEST_CASE("trace and Frobenius identities") {
  for (const auto cfg : {ModelConfig{3, Topology::Open, 2, 1.1, -0.6},
                         ModelConfig{4, Topology::Closed, 1, 0.4, 1.7}}) {
    const DenseRealMatrix h = build_hamiltonian(cfg).matrix;
    const auto eigs = eigen_symmetric(h);
    double sum = 0.0, sum_sq = 0.0;
    for (const double e : eigs) {
      sum += e;
      sum_sq += e * e;
    }
    CHECK(std::abs(sum) <= 1e-10 * static_cast<double>(h.rows()));
    CHECK(sum_sq == doctest::Approx(h.squaredNorm()).epsilon(1e-8));
  }
}

TEST_CASE("Kramers doubling at even spin count") {
  for (const int n : {2, 4}) {
    const Spectrum s = spectrum_of({n, Topology::Open, 1, 1.0, 0.3});
    for (const auto& level : s.levels) CHECK(level.multiplicity % 2 == 0);
  }
}

TEST_CASE("spectral +-E symmetry as multisets") {
  for (int n = 1; n <= 5; ++n) {
    const auto eigs = eigen_symmetric(build_hamiltonian({n, Topology::Open, 1, 0.8, -1.1}).matrix);
    std::vector<double> negated(eigs.rbegin(), eigs.rend());
    for (double& e : negated) e = -e;
    CHECK(max_sorted_deviation(eigs, negated) < 1e-10);
  }
}

// Independent oracle: exact characteristic polynomial over rationals plus
// Sturm bisection, no shared code with the Eigen-backed solver.
TEST_CASE("eigensolver oracle on random 6x6 symmetric matrices") {
  std::mt19937_64 rng(2024);
  for (int rep = 0; rep < 5; ++rep) {
    const int n = 6;
    RationalMatrix mq(n, n);
    DenseRealMatrix md(n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = r; c < n; ++c) {
        const long ticks = static_cast<long>(rng() % 257) - 128;  // dyadic: exact both ways
        Rational q(ticks, 64);
        q.canonicalize();
        mq(r, c) = q;
        mq(c, r) = q;
        md(r, c) = static_cast<double>(ticks) / 64.0;
        md(c, r) = md(r, c);
      }
    }
    const auto eigs = eigen_symmetric(md);

    std::vector<double> oracle;
    for (const auto& [root, mult] : real_roots_exact(charpoly_exact(mq))) {
      oracle.insert(oracle.end(), mult, root);
    }
    REQUIRE(oracle.size() == static_cast<std::size_t>(n));
    CHECK(max_sorted_deviation(eigs, oracle) < 1e-8);

    double sum = 0.0, sum_sq = 0.0;
    for (const double e : eigs) {
      sum += e;
      sum_sq += e * e;
    }
    CHECK(sum == doctest::Approx(md.trace()).epsilon(1e-10).scale(1.0));
    CHECK(sum_sq == doctest::Approx(md.squaredNorm()).epsilon(1e-8));
  }
}

TEST_CASE("3-spin closed chain +-E symmetry is measured, not assumed") {
  const auto eigs = eigen_symmetric(build_hamiltonian({3, Topology::Closed, 1, 1.0, 1.0}).matrix);
  std::vector<double> negated(eigs.rbegin(), eigs.rend());
  for (double& e : negated) e = -e;
  MESSAGE("closed N=3 +-E multiset deviation at (G,J)=(1,1): ",
          max_sorted_deviation(eigs, negated));
}
