#include "jcxy/analytic_n4.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jcxy {

namespace {

// Inner radicands of the branch formulas can dip infinitesimally negative in
// floating point at degeneracy points; clamp within -1e-12.
constexpr double kRadicandClamp = 1e-12;

double clamped_sqrt(double radicand) {
  if (radicand < 0.0) {
    if (radicand < -kRadicandClamp) {
      throw std::domain_error("clamped_sqrt: radicand " + std::to_string(radicand) +
                              " below the roundoff clamp");
    }
    radicand = 0.0;
  }
  return std::sqrt(radicand);
}

void check_finite(double g, double j, const char* who) {
  if (!std::isfinite(g) || !std::isfinite(j)) {
    throw std::invalid_argument(std::string(who) + ": couplings must be finite");
  }
}

// Real roots of a monic u-polynomial with all-real roots, via the balanced
// companion matrix. Degree >= 1.
std::vector<double> companion_roots(const std::vector<double>& monic) {
  const int deg = static_cast<int>(monic.size()) - 1;
  if (deg == 1) return {-monic[0]};
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(deg, deg);
  for (int r = 1; r < deg; ++r) c(r, r - 1) = 1.0;
  for (int r = 0; r < deg; ++r) c(r, deg - 1) = -monic[r];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(c, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("roots_of_factored: companion eigensolve failed to converge");
  }
  std::vector<double> roots(deg);
  for (int r = 0; r < deg; ++r) {
    const std::complex<double> u = solver.eigenvalues()(r);
    // Repeated roots scatter by ~eps^(1/multiplicity); a transcription error
    // in the coefficients shows up as an O(1) imaginary part.
    if (std::abs(u.imag()) > 1e-4 * std::max(1.0, std::abs(u.real()))) {
      throw std::runtime_error("roots_of_factored: complex u-root " + std::to_string(u.real()) +
                               " + " + std::to_string(u.imag()) + "i");
    }
    roots[r] = u.real();
  }
  return roots;
}

}  // namespace

int multiplicity_of_degeneracy_label(char letter) {
  switch (letter) {
    case 'D':
      return 2;
    case 'Q':
      return 4;
    case 'O':
      return 8;
    default:
      throw std::invalid_argument("unknown degeneracy letter: " + std::string(1, letter));
  }
}

std::vector<AnalyticLevel> levels_open_edge(double g, double j) {
  check_finite(g, j, "levels_open_edge");
  const double g2 = g * g, j2 = j * j;

  // Both inner radicands are nonnegative for all real couplings:
  // 2G^2J^2 + J^4 is a sum of squares-of-products, and
  // G^4 - 2G^2J^2 + 5J^4 = (G^2 - J^2)^2 + 4J^4.
  const double inner_d = clamped_sqrt(2.0 * g2 * j2 + j2 * j2);
  const double inner_q = clamped_sqrt(g2 * g2 - 2.0 * g2 * j2 + 5.0 * j2 * j2);

  const double e1 = clamped_sqrt(g2 + 3.0 * j2 + 2.0 * inner_d);
  const double e2 = clamped_sqrt((g2 + 3.0 * j2 + inner_q) / 2.0);
  const double e3 = clamped_sqrt(g2 + 3.0 * j2 - 2.0 * inner_d);
  const double e4 = clamped_sqrt((g2 + 3.0 * j2 - inner_q) / 2.0);

  return {
      {e1, 2, "E1^D"},  {e2, 4, "E2^Q"},  {e3, 2, "E3^D"},
      {e4, 4, "E4^Q"},  {0.0, 8, "E5^O"}, {-e4, 4, "E6^Q"},
      {-e3, 2, "E7^D"}, {-e2, 4, "E8^Q"}, {-e1, 2, "E9^D"},
  };
}

FactoredCharPoly charpoly_open_second(double g, double j) {
  check_finite(g, j, "charpoly_open_second");
  return charpoly_open_second_t<double>(g, j);
}

FactoredCharPoly charpoly_closed(double g, double j) {
  check_finite(g, j, "charpoly_closed");
  return charpoly_closed_t<double>(g, j);
}

std::pair<double, double> analytic_branch_closed_quadratic(double g, double j) {
  check_finite(g, j, "analytic_branch_closed_quadratic");
  const double g2 = g * g, j2 = j * j;
  const double inner = clamped_sqrt(g2 * g2 + 16.0 * j2 * j2);
  const double e_plus = clamped_sqrt((g2 + 4.0 * j2 + inner) / 2.0);
  const double e_minus = clamped_sqrt((g2 + 4.0 * j2 - inner) / 2.0);
  return {e_plus, e_minus};
}

std::vector<double> roots_of_factored(const FactoredCharPoly& p) {
  std::vector<double> out;
  for (const auto& factor : p.factors) {
    if (factor.coefficients.empty() || factor.exponent < 1) {
      throw std::invalid_argument("roots_of_factored: malformed factor");
    }
    const int deg = factor.degree();
    for (int k = 1; k <= deg; k += 2) {
      if (factor.coefficients[k] != 0.0) {
        throw std::invalid_argument("roots_of_factored: factor has an odd power of E");
      }
    }

    // u = E^2 substitution.
    std::vector<double> u_coeffs(deg / 2 + 1);
    for (int k = 0; k <= deg / 2; ++k) u_coeffs[k] = factor.coefficients[2 * k];

    // Exact zero roots live in trailing zero coefficients; deflate them
    // before the companion solve so repeated zeros stay exact.
    int zeros = 0;
    while (zeros < static_cast<int>(u_coeffs.size()) - 1 && u_coeffs[zeros] == 0.0) ++zeros;
    for (int z = 0; z < 2 * factor.exponent * zeros; ++z) out.push_back(0.0);

    std::vector<double> monic(u_coeffs.begin() + zeros, u_coeffs.end());
    const double lead = monic.back();
    if (lead == 0.0) throw std::invalid_argument("roots_of_factored: zero leading coefficient");
    if (static_cast<int>(monic.size()) > 1) {
      for (double& c : monic) c /= lead;
      for (const double u : companion_roots(monic)) {
        double value = u;
        if (value < 0.0) {
          if (value < -1e-10) {
            throw std::runtime_error("roots_of_factored: negative u-root " +
                                     std::to_string(value));
          }
          value = 0.0;
        }
        if (value == 0.0) {
          for (int z = 0; z < 2 * factor.exponent; ++z) out.push_back(0.0);
        } else {
          const double e = std::sqrt(value);
          for (int z = 0; z < factor.exponent; ++z) {
            out.push_back(e);
            out.push_back(-e);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jcxy
