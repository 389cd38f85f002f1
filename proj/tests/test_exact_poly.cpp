#include <doctest.h>

#include <set>

#include "jcxy/exact_poly.hpp"
#include "jcxy/model.hpp"
#include "jcxy/spectral.hpp"
#include "helpers.hpp"

using namespace jcxy;

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

RationalPolynomial poly(std::initializer_list<long> coeffs) {
  RationalPolynomial p;
  for (const long c : coeffs) p.coefficients.push_back(q(c));
  return p;
}

}  // namespace

TEST_CASE("rationals stay reduced with positive denominators") {
  CHECK(q(3, 6) == q(1, 2));
  CHECK(q(-1, -2) == q(1, 2));
  CHECK(q(2, -4) == q(-1, 2));
  CHECK(q(2, -4).get_den() == 2);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-2/3") == q(-2, 3));
  CHECK(parse_rational("7") == q(7));
  CHECK(parse_rational("-0.3") == q(-3, 10));
  CHECK(parse_rational("1.25") == q(5, 4));
  CHECK(parse_rational(" 1 / 2 ") == q(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.2/3"), std::invalid_argument);
}

TEST_CASE("charpoly of sigma_x is E^2 - 1") {
  RationalMatrix sx(2, 2);
  sx(0, 1) = 1;
  sx(1, 0) = 1;
  const RationalPolynomial p = charpoly_exact(sx);
  CHECK(p == poly({-1, 0, 1}));
}

TEST_CASE("charpoly of the single-spin JC block is E^4 - E^2") {
  const RationalMatrix h = build_hamiltonian_exact({1, Topology::Open, 1, q(1), q(0)});
  CHECK(charpoly_exact(h) == poly({0, 0, -1, 0, 1}));
}

TEST_CASE("charpoly_exact rejects non-square and empty input") {
  CHECK_THROWS_AS(charpoly_exact(RationalMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(charpoly_exact(RationalMatrix(0, 0)), std::invalid_argument);
}

TEST_CASE("exact and floating-point Hamiltonians agree entrywise") {
  // Dyadic couplings are exactly representable as doubles.
  const RationalModelConfig cfg{3, Topology::Closed, 2, q(3, 4), q(-5, 8)};
  const RationalMatrix hq = build_hamiltonian_exact(cfg);
  const DenseRealMatrix hd = build_hamiltonian(cfg.to_double()).matrix;
  REQUIRE(hq.rows() == static_cast<std::size_t>(hd.rows()));
  for (std::size_t r = 0; r < hq.rows(); ++r) {
    for (std::size_t c = 0; c < hq.cols(); ++c) {
      CHECK(mpq_class(hq(r, c)).get_d() == hd(r, c));
    }
  }
}

TEST_CASE("expand_factored") {
  SUBCASE("E^8 (E^2-1)^2") {
    RationalFactoredPoly fp;
    fp.factors.push_back({{q(0), q(1)}, 8});        // plain E, exponent 8
    fp.factors.push_back({{q(-1), q(0), q(1)}, 2});  // (E^2 - 1)^2
    CHECK(expand_factored(fp) == poly({0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -2, 0, 1}));
  }
  SUBCASE("(E^4 - 4E^2 + 2)^2") {
    RationalFactoredPoly fp;
    fp.factors.push_back({{q(2), q(0), q(-4), q(0), q(1)}, 2});
    CHECK(expand_factored(fp) == poly({4, 0, -16, 0, 20, 0, -8, 0, 1}));
  }
  SUBCASE("closed-chain form at (2,1) expands to a monic degree-32 polynomial") {
    const RationalPolynomial p = expand_factored(charpoly_closed_t<Rational>(q(2), q(1)));
    CHECK(p.degree() == 32);
    CHECK(p.coefficients[32] == 1);
    CHECK(p.coefficients[31] == 0);
  }
}

TEST_CASE("closed-chain charpoly at G=J=1 equals the hand-substituted factorization") {
  // E^8 (E^2-1)^2 (E^4-5E^2+2)^2 (E^6-14E^4+39E^2-10)^2, written out directly.
  RationalFactoredPoly fp;
  fp.factors.push_back({{q(0), q(0), q(1)}, 4});
  fp.factors.push_back({{q(-1), q(0), q(1)}, 2});
  fp.factors.push_back({{q(2), q(0), q(-5), q(0), q(1)}, 2});
  fp.factors.push_back({{q(-10), q(0), q(39), q(0), q(-14), q(0), q(1)}, 2});

  const RationalMatrix h = build_hamiltonian_exact({4, Topology::Closed, 1, q(1), q(1)});
  CHECK(charpoly_exact(h) == expand_factored(fp));
}

TEST_CASE("certify_factorization") {
  SUBCASE("second-site form matches the second-site Hamiltonian") {
    const RationalModelConfig cfg{4, Topology::Open, 2, q(1), q(1)};
    const auto cert = certify_factorization(cfg, charpoly_open_second_t<Rational>(q(1), q(1)));
    CHECK(cert.equal);
  }
  SUBCASE("closed form matches regardless of the coupled site") {
    const RationalModelConfig cfg{4, Topology::Closed, 3, q(3, 2), q(-2, 3)};
    const auto cert = certify_factorization(cfg, charpoly_closed_t<Rational>(q(3, 2), q(-2, 3)));
    CHECK(cert.equal);
  }
  SUBCASE("edge-coupled chain does not satisfy the second-site form") {
    const RationalModelConfig cfg{4, Topology::Open, 1, q(1), q(1)};
    const auto cert = certify_factorization(cfg, charpoly_open_second_t<Rational>(q(1), q(1)));
    CHECK_FALSE(cert.equal);
    CHECK(cert.mismatch_power % 2 == 0);
    CHECK(cert.lhs != cert.rhs);
    CHECK(cert.to_report().find("MISMATCH") != std::string::npos);
  }
  SUBCASE("only 4-spin chains are certified") {
    const RationalModelConfig cfg{3, Topology::Open, 1, q(1), q(1)};
    CHECK_THROWS_AS(certify_factorization(cfg, charpoly_closed_t<Rational>(q(1), q(1))),
                    std::invalid_argument);
  }
}

TEST_CASE("charpoly structural invariants for the 4-spin chain") {
  for (const auto& cfg : {RationalModelConfig{4, Topology::Open, 1, q(1, 2), q(1, 3)},
                          RationalModelConfig{4, Topology::Closed, 2, q(-2, 5), q(7, 4)}}) {
    const RationalPolynomial p = charpoly_exact(build_hamiltonian_exact(cfg));
    CHECK(p.degree() == 32);
    CHECK(p.coefficients[32] == 1);   // monic
    CHECK(p.coefficients[31] == 0);   // traceless
    for (int k = 1; k <= 31; k += 2) CHECK(p.coefficients[k] == 0);  // even in E
  }
  // Bipartite +-E symmetry also holds exactly for small even open chains.
  const RationalPolynomial p2 =
      charpoly_exact(build_hamiltonian_exact({2, Topology::Open, 1, q(4, 3), q(-1, 2)}));
  for (int k = 1; k <= p2.degree(); k += 2) CHECK(p2.coefficients[k] == 0);
}

TEST_CASE("polynomial gcd and division") {
  const RationalPolynomial a = poly_mul(poly({-1, 1}), poly({2, 1}));   // (E-1)(E+2)
  const RationalPolynomial b = poly_mul(poly({-1, 1}), poly({-3, 1}));  // (E-1)(E-3)
  CHECK(poly_gcd(a, b) == poly({-1, 1}));
  CHECK(poly_divexact(a, poly({-1, 1})) == poly({2, 1}));
  CHECK_THROWS_AS(poly_divexact(a, poly({-3, 1})), std::invalid_argument);
}

TEST_CASE("square-free decomposition separates multiplicities") {
  // (E^2-1)^3 (E^2-4)
  RationalPolynomial p = poly({-4, 0, 1});
  const RationalPolynomial cube = poly({-1, 0, 1});
  for (int i = 0; i < 3; ++i) p = poly_mul(p, cube);
  const auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].second == 1);
  CHECK(parts[0].first == poly({-4, 0, 1}));
  CHECK(parts[1].second == 3);
  CHECK(parts[1].first == poly({-1, 0, 1}));
}

TEST_CASE("real roots with exact multiplicities") {
  SUBCASE("simple cubic") {
    const RationalPolynomial p =
        poly_mul(poly_mul(poly({-1, 1}), poly({-2, 1})), poly({-3, 1}));
    const auto roots = real_roots_exact(p);
    REQUIRE(roots.size() == 3);
    for (int i = 0; i < 3; ++i) {
      CHECK(roots[i].first == doctest::Approx(i + 1.0).epsilon(1e-12));
      CHECK(roots[i].second == 1);
    }
  }
  SUBCASE("repeated roots, including an exact zero") {
    // E^2 (E^2-1)^3
    RationalPolynomial p = poly({0, 0, 1});
    const RationalPolynomial cube = poly({-1, 0, 1});
    for (int i = 0; i < 3; ++i) p = poly_mul(p, cube);
    const auto roots = real_roots_exact(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].first == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(roots[0].second == 3);
    CHECK(roots[1].first == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(roots[1].second == 2);
    CHECK(roots[2].first == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(roots[2].second == 3);
  }
  SUBCASE("roots of an exact charpoly match the eigensolver") {
    const RationalModelConfig cfg{4, Topology::Open, 1, q(7, 8), q(-3, 4)};
    const auto pairs = real_roots_exact(charpoly_exact(build_hamiltonian_exact(cfg)));
    std::vector<double> roots;
    for (const auto& [value, mult] : pairs) roots.insert(roots.end(), mult, value);
    const auto eigs = eigen_symmetric(build_hamiltonian(cfg.to_double()).matrix);
    CHECK(jcxy::testing::max_sorted_deviation(roots, eigs) < 1e-8);
  }
}

TEST_CASE("root finding on random factor products with known multiplicities") {
  std::mt19937_64 rng(515);
  for (int rep = 0; rep < 10; ++rep) {
    // Product of (E - r_i)^{m_i} with distinct small rational roots.
    std::vector<std::pair<Rational, int>> truth;
    RationalPolynomial p;
    p.coefficients = {q(1)};
    std::set<Rational> used;
    const int n_roots = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n_roots; ++i) {
      Rational root;
      do {
        root = q(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 4));
      } while (used.count(root));
      used.insert(root);
      const int mult = 1 + static_cast<int>(rng() % 3);
      truth.emplace_back(root, mult);
      RationalPolynomial linear;
      linear.coefficients = {-root, q(1)};
      for (int m = 0; m < mult; ++m) p = poly_mul(p, linear);
    }
    std::sort(truth.begin(), truth.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    const auto found = real_roots_exact(p);
    REQUIRE(found.size() == truth.size());
    for (std::size_t i = 0; i < truth.size(); ++i) {
      CHECK(found[i].first ==
            doctest::Approx(mpq_class(truth[i].first).get_d()).epsilon(1e-11).scale(1.0));
      CHECK(found[i].second == truth[i].second);
    }
  }
}

TEST_CASE("certification sample grid") {
  const auto points = certification_sample_points();
  CHECK(points.size() == 25);
  std::set<std::pair<std::string, std::string>> distinct;
  bool has_g_axis = false, has_j_axis = false, has_origin = false, has_mixed_sign = false;
  for (const auto& [g, j] : points) {
    distinct.insert({mpq_class(g).get_str(), mpq_class(j).get_str()});
    if (g == 0 && j == 0) has_origin = true;
    if (g == 0 && j != 0) has_j_axis = true;
    if (j == 0 && g != 0) has_g_axis = true;
    if (sgn(mpq_class(g)) * sgn(mpq_class(j)) < 0) has_mixed_sign = true;
  }
  CHECK(distinct.size() == 25);
  CHECK(has_origin);
  CHECK(has_g_axis);
  CHECK(has_j_axis);
  CHECK(has_mixed_sign);
}

TEST_CASE("exact-path validation") {
  CHECK_THROWS_AS(build_hamiltonian_exact({7, Topology::Open, 1, q(1), q(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_hamiltonian_exact({2, Topology::Closed, 1, q(1), q(1)}),
                  std::invalid_argument);
}
