#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "jcxy/analytic_n4.hpp"
#include "jcxy/model.hpp"

namespace jcxy {

// Arbitrary-precision rational, always reduced with positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

using RationalFactoredPoly = FactoredPoly<Rational>;

// Dense matrix over exact rationals; carrier for the exact path.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix rational_generator(Generator name);

// Polynomial in E over Q; coefficients[k] multiplies E^k. Trailing zero
// coefficients are tolerated until trim().
struct RationalPolynomial {
  std::vector<Rational> coefficients;

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return degree() < 0; }
  void trim();
};

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b);

RationalPolynomial poly_add(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial poly_sub(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial poly_mul(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial poly_derivative(const RationalPolynomial& p);
Rational poly_eval(const RationalPolynomial& p, const Rational& x);
// Exact quotient; throws std::invalid_argument if b does not divide a.
RationalPolynomial poly_divexact(const RationalPolynomial& a, const RationalPolynomial& b);
// Monic gcd over Q (primitive PRS over Z under the hood).
RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b);
// Yun square-free decomposition: p = prod q_i^i with q_i monic square-free.
std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(
    const RationalPolynomial& p);
// All real roots with exact multiplicities, ascending. Square-free parts are
// isolated by Sturm sequences and refined by rational bisection to ~1e-13.
std::vector<std::pair<double, int>> real_roots_exact(const RationalPolynomial& p);

struct RationalModelConfig {
  int n_spins = 1;
  Topology topology = Topology::Open;
  int coupled_site = 1;
  Rational g, j;

  void validate() const;
  ModelConfig to_double() const;
};

// Same assembly as build_hamiltonian, over exact rationals. Every entry is
// one of {0, +g, -j}, so the result is exact for rational couplings.
RationalMatrix build_hamiltonian_exact(const RationalModelConfig& config);

// det(E*I - m), monic of degree dim, via the Faddeev-LeVerrier recurrence
// run over big integers after clearing denominators.
RationalPolynomial charpoly_exact(const RationalMatrix& m);

RationalPolynomial expand_factored(const RationalFactoredPoly& p);

struct FactorizationCertificate {
  bool equal = false;
  int mismatch_power = -1;  // lowest differing power of E when !equal
  Rational lhs, rhs;        // exact coefficients at that power

  std::string to_report() const;
};

// Compares the exact characteristic polynomial of the configured N=4
// Hamiltonian with the expansion of the claimed factored form,
// coefficient for coefficient.
FactorizationCertificate certify_factorization(const RationalModelConfig& config,
                                               const RationalFactoredPoly& claimed);

// 25 rational (G, J) samples: both axes, the origin, mixed signs, and varied
// denominators. Shared by the certification suites.
std::vector<std::pair<Rational, Rational>> certification_sample_points();

// Accepts "p/q", plain integers, and fixed-point decimals ("-0.3" -> -3/10).
Rational parse_rational(const std::string& text);

}  // namespace jcxy
