#pragma once

#include <string>
#include <utility>
#include <vector>

namespace jcxy {

// One closed-form level of the 4-spin chain. The degeneracy letter in the
// branch label maps D -> 2, Q -> 4, O -> 8.
struct AnalyticLevel {
  double energy = 0.0;
  int multiplicity = 0;
  std::string branch_label;
};

int multiplicity_of_degeneracy_label(char letter);

// A polynomial factor in E (coefficients[k] multiplies E^k) raised to an
// integer power.
template <class Scalar>
struct PolyFactor {
  std::vector<Scalar> coefficients;
  int exponent = 1;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
};

template <class Scalar>
struct FactoredPoly {
  std::vector<PolyFactor<Scalar>> factors;

  int total_degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.degree() * f.exponent;
    return d;
  }
};

using FactoredCharPoly = FactoredPoly<double>;

// The nine branches of the edge-coupled open chain, listed in the order that
// is strictly decreasing at G=0: E1, E2, E3, E4, the octuply degenerate zero
// level, and the negated mirrors E6..E9. Multiplicities (2,4,2,4,8,4,2,4,2).
std::vector<AnalyticLevel> levels_open_edge(double g, double j);

// Factored characteristic polynomial, open chain with the photon on the
// second site: E^8 * [quartic]^2 * {octic}^2. The zero-level factor is
// stored as (E^2, exponent 4) so that every factor is even in E.
FactoredCharPoly charpoly_open_second(double g, double j);

// Factored characteristic polynomial of the closed chain:
// E^8 * (E^2-G^2)^2 * [quartic]^2 * {sextic}^2.
FactoredCharPoly charpoly_closed(double g, double j);

// The two nonnegative closed-chain levels from the quadratic-in-E^2 factor,
// sqrt((G^2+4J^2 +- sqrt(G^4+16J^4))/2); their negatives are implied mirrors.
std::pair<double, double> analytic_branch_closed_quadratic(double g, double j);

// All real roots, with multiplicity, of a factored polynomial that is even
// in E. Substitutes u = E^2, deflates exact zero roots, solves the rest by a
// balanced companion-matrix eigensolve, and emits +-sqrt(u) per u-root with
// the factor exponent as multiplicity. Sorted ascending.
std::vector<double> roots_of_factored(const FactoredCharPoly& p);

// Scalar-generic factor constructors shared by the floating-point path above
// and the exact-rational certification path. Scalar needs +, -, *, unary -,
// and construction from int.
template <class Scalar>
FactoredPoly<Scalar> charpoly_open_second_t(const Scalar& g, const Scalar& j) {
  const Scalar zero(0), one(1);
  const Scalar g2 = g * g, j2 = j * j;
  const Scalar g4 = g2 * g2, j4 = j2 * j2;
  const Scalar g6 = g4 * g2, j6 = j4 * j2, j8 = j4 * j4;

  FactoredPoly<Scalar> p;
  p.factors.push_back({{zero, zero, one}, 4});  // E^8 as (E^2)^4
  p.factors.push_back({{(g2 + j2) * j2, zero, -(g2 + Scalar(3) * j2), zero, one}, 2});
  p.factors.push_back({{g6 * j2 + Scalar(7) * g4 * j4 + Scalar(3) * g2 * j6 + Scalar(5) * j8,
                        zero,
                        -(g6 + Scalar(7) * g4 * j2 + Scalar(23) * g2 * j4 + Scalar(21) * j6),
                        zero,
                        Scalar(3) * g4 + Scalar(15) * g2 * j2 + Scalar(24) * j4,
                        zero,
                        -(Scalar(3) * g2 + Scalar(9) * j2),
                        zero,
                        one},
                       2});
  return p;
}

template <class Scalar>
FactoredPoly<Scalar> charpoly_closed_t(const Scalar& g, const Scalar& j) {
  const Scalar zero(0), one(1);
  const Scalar g2 = g * g, j2 = j * j;
  const Scalar g4 = g2 * g2, j4 = j2 * j2;

  FactoredPoly<Scalar> p;
  p.factors.push_back({{zero, zero, one}, 4});  // E^8 as (E^2)^4
  p.factors.push_back({{-g2, zero, one}, 2});   // levels +-G, independent of J
  p.factors.push_back({{Scalar(2) * g2 * j2, zero, -(g2 + Scalar(4) * j2), zero, one}, 2});
  p.factors.push_back({{-(Scalar(2) * g4 * j2 + Scalar(8) * g2 * j4),
                        zero,
                        g4 + Scalar(6) * g2 * j2 + Scalar(32) * j4,
                        zero,
                        -(Scalar(2) * g2 + Scalar(12) * j2),
                        zero,
                        one},
                       2});
  return p;
}

}  // namespace jcxy
