#include "jcxy/exact_poly.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace jcxy {

namespace {

Rational make_q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

int sign_of(const Rational& x) { return sgn(x); }

// ---------------------------------------------------------------------------
// Integer-polynomial layer for gcd via the primitive PRS.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<BigInt>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

BigInt zcontent(const ZPoly& p) {
  BigInt c = 0;
  for (const BigInt& a : p) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
  return c;  // nonnegative; 0 only for the zero polynomial
}

void zmake_primitive(ZPoly& p) {
  const BigInt c = zcontent(p);
  if (c == 0 || c == 1) return;
  for (BigInt& a : p) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
}

// Pseudo-remainder: repeatedly scales by lc(b) so every division is exact.
ZPoly zpseudo_rem(ZPoly a, const ZPoly& b) {
  ztrim(a);
  const BigInt lcb = b.back();
  while (!a.empty() && zdeg(a) >= zdeg(b)) {
    const BigInt lca = a.back();
    const int shift = zdeg(a) - zdeg(b);
    for (BigInt& c : a) c *= lcb;
    for (int k = 0; k <= zdeg(b); ++k) a[k + shift] -= lca * b[k];
    ztrim(a);
  }
  return a;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
  ztrim(a);
  ztrim(b);
  while (!b.empty()) {
    ZPoly r = zpseudo_rem(a, b);
    zmake_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  zmake_primitive(a);
  return a;
}

ZPoly to_integer_primitive(const RationalPolynomial& p) {
  BigInt den = 1;
  for (const Rational& c : p.coefficients) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  ZPoly out(p.coefficients.size());
  for (std::size_t k = 0; k < p.coefficients.size(); ++k) {
    const Rational& c = p.coefficients[k];
    out[k] = c.get_num() * (den / c.get_den());
  }
  ztrim(out);
  zmake_primitive(out);
  return out;
}

RationalPolynomial monic_from_integer(const ZPoly& p) {
  RationalPolynomial out;
  if (p.empty()) return out;
  out.coefficients.resize(p.size());
  const BigInt lead = p.back();
  for (std::size_t k = 0; k < p.size(); ++k) {
    Rational c(p[k], lead);
    c.canonicalize();
    out.coefficients[k] = c;
  }
  return out;
}

RationalPolynomial make_monic(const RationalPolynomial& p) {
  RationalPolynomial out = p;
  out.trim();
  if (out.is_zero()) return out;
  const Rational lead = out.coefficients.back();
  for (Rational& c : out.coefficients) c /= lead;
  return out;
}

// Scales by a positive rational so coefficients become primitive integers;
// the sign pattern is preserved, which is all Sturm sequences need.
RationalPolynomial normalize_positive_scale(const RationalPolynomial& p) {
  RationalPolynomial q = p;
  q.trim();
  if (q.is_zero()) return q;
  const ZPoly zp = to_integer_primitive(q);
  // to_integer_primitive keeps signs (den and content are positive).
  RationalPolynomial out;
  out.coefficients.resize(zp.size());
  for (std::size_t k = 0; k < zp.size(); ++k) out.coefficients[k] = Rational(zp[k]);
  return out;
}

// Remainder of a by b over Q (plain long division).
RationalPolynomial poly_rem(RationalPolynomial a, const RationalPolynomial& b) {
  a.trim();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const Rational coef = a.coefficients.back() / b.coefficients.back();
    const int shift = a.degree() - b.degree();
    for (int k = 0; k <= b.degree(); ++k) {
      a.coefficients[k + shift] -= coef * b.coefficients[k];
    }
    a.coefficients.pop_back();
    a.trim();
  }
  return a;
}

// ---------------------------------------------------------------------------
// Sturm isolation + rational bisection for square-free polynomials.
// ---------------------------------------------------------------------------

struct SturmChain {
  std::vector<RationalPolynomial> seq;

  int variations(const Rational& x) const {
    int count = 0;
    int prev = 0;
    for (const auto& s : seq) {
      const int sg = sign_of(poly_eval(s, x));
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  }
};

SturmChain build_sturm(const RationalPolynomial& q) {
  SturmChain chain;
  chain.seq.push_back(normalize_positive_scale(q));
  chain.seq.push_back(normalize_positive_scale(poly_derivative(q)));
  while (chain.seq.back().degree() > 0) {
    RationalPolynomial r =
        poly_rem(chain.seq[chain.seq.size() - 2], chain.seq[chain.seq.size() - 1]);
    if (r.is_zero()) {
      throw std::logic_error("build_sturm: input was not square-free");
    }
    for (Rational& c : r.coefficients) c = -c;
    chain.seq.push_back(normalize_positive_scale(r));
  }
  return chain;
}

// All roots of q lie strictly inside (-R, R).
Rational cauchy_bound(const RationalPolynomial& q) {
  Rational best(0);
  const Rational lead = q.coefficients.back();
  for (int k = 0; k < q.degree(); ++k) {
    Rational r = abs(q.coefficients[k] / lead);
    if (r > best) best = r;
  }
  return best + 1;
}

struct RootFinder {
  const RationalPolynomial& q;
  const SturmChain& chain;
  Rational width;
  std::vector<double>& out;

  // Point near the middle of (a, b) at which q does not vanish.
  Rational midpoint_nonroot(const Rational& a, const Rational& b) const {
    const Rational span = b - a;
    for (long den = 2; den < 256; ++den) {
      Rational m = a + span / den;
      if (sign_of(poly_eval(q, m)) != 0) return m;
    }
    throw std::logic_error("midpoint_nonroot: no root-free point found");
  }

  // One simple root in (a, b) with sign(q(a)) != sign(q(b)).
  void refine(Rational a, Rational b) const {
    int sa = sign_of(poly_eval(q, a));
    for (int iter = 0; iter < 4096 && b - a > width; ++iter) {
      const Rational m = (a + b) / 2;
      const int sm = sign_of(poly_eval(q, m));
      if (sm == 0) {
        out.push_back(mpq_class(m).get_d());
        return;
      }
      if (sm == sa) {
        a = m;
      } else {
        b = m;
      }
    }
    out.push_back(mpq_class((a + b) / 2).get_d());
  }

  // Precondition: q(a) != 0, q(b) != 0; count = #roots in (a, b).
  void isolate(const Rational& a, int va, const Rational& b, int vb) const {
    const int count = va - vb;
    if (count <= 0) return;
    if (count == 1) {
      refine(a, b);
      return;
    }
    const Rational m = midpoint_nonroot(a, b);
    const int vm = chain.variations(m);
    isolate(a, va, m, vm);
    isolate(m, vm, b, vb);
  }
};

// Roots of a square-free polynomial, appended to out as doubles.
void squarefree_real_roots(const RationalPolynomial& q, std::vector<double>& out) {
  if (q.degree() <= 0) return;
  if (q.degree() == 1) {
    Rational root = -q.coefficients[0] / q.coefficients[1];
    out.push_back(mpq_class(root).get_d());
    return;
  }
  const SturmChain chain = build_sturm(q);
  const Rational bound = cauchy_bound(q);
  Rational width(1);
  {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 13);
    width = Rational(1, scale);
    width.canonicalize();
  }
  RootFinder finder{q, chain, width, out};
  const Rational lo = -bound, hi = bound;
  finder.isolate(lo, chain.variations(lo), hi, chain.variations(hi));
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalMatrix
// ---------------------------------------------------------------------------

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) == 0) continue;
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t k = 0; k < b.cols(); ++k) {
          out(r * b.rows() + i, c * b.cols() + k) = a(r, c) * b(i, k);
        }
      }
    }
  }
  return out;
}

RationalMatrix rational_generator(Generator name) {
  const Eigen::Matrix2d m = generator(name).real_matrix();  // entries 0 or +-1
  RationalMatrix out(2, 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out(r, c) = Rational(static_cast<long>(m(r, c)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// RationalPolynomial
// ---------------------------------------------------------------------------

int RationalPolynomial::degree() const {
  for (int k = static_cast<int>(coefficients.size()) - 1; k >= 0; --k) {
    if (coefficients[k] != 0) return k;
  }
  return -1;
}

void RationalPolynomial::trim() {
  while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return false;
  for (int k = 0; k <= da; ++k) {
    if (a.coefficients[k] != b.coefficients[k]) return false;
  }
  return true;
}

RationalPolynomial poly_add(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial out;
  out.coefficients.resize(std::max(a.coefficients.size(), b.coefficients.size()));
  for (std::size_t k = 0; k < out.coefficients.size(); ++k) {
    if (k < a.coefficients.size()) out.coefficients[k] += a.coefficients[k];
    if (k < b.coefficients.size()) out.coefficients[k] += b.coefficients[k];
  }
  out.trim();
  return out;
}

RationalPolynomial poly_sub(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial out;
  out.coefficients.resize(std::max(a.coefficients.size(), b.coefficients.size()));
  for (std::size_t k = 0; k < out.coefficients.size(); ++k) {
    if (k < a.coefficients.size()) out.coefficients[k] += a.coefficients[k];
    if (k < b.coefficients.size()) out.coefficients[k] -= b.coefficients[k];
  }
  out.trim();
  return out;
}

RationalPolynomial poly_mul(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coefficients.resize(a.degree() + b.degree() + 1);
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coefficients[i] == 0) continue;
    for (int k = 0; k <= b.degree(); ++k) {
      out.coefficients[i + k] += a.coefficients[i] * b.coefficients[k];
    }
  }
  return out;
}

RationalPolynomial poly_derivative(const RationalPolynomial& p) {
  RationalPolynomial out;
  if (p.degree() < 1) return out;
  out.coefficients.resize(p.degree());
  for (int k = 1; k <= p.degree(); ++k) {
    out.coefficients[k - 1] = Rational(k) * p.coefficients[k];
  }
  out.trim();
  return out;
}

Rational poly_eval(const RationalPolynomial& p, const Rational& x) {
  Rational acc(0);
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coefficients[k];
  return acc;
}

RationalPolynomial poly_divexact(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial rem = a;
  rem.trim();
  if (b.is_zero()) throw std::invalid_argument("poly_divexact: division by zero polynomial");
  RationalPolynomial quot;
  if (rem.degree() >= b.degree()) quot.coefficients.resize(rem.degree() - b.degree() + 1);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const Rational coef = rem.coefficients.back() / b.coefficients.back();
    const int shift = rem.degree() - b.degree();
    quot.coefficients[shift] = coef;
    for (int k = 0; k <= b.degree(); ++k) {
      rem.coefficients[k + shift] -= coef * b.coefficients[k];
    }
    rem.coefficients.pop_back();
    rem.trim();
  }
  if (!rem.is_zero()) throw std::invalid_argument("poly_divexact: nonzero remainder");
  return quot;
}

RationalPolynomial poly_gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() && b.is_zero()) {
    throw std::invalid_argument("poly_gcd: gcd of two zero polynomials");
  }
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  return monic_from_integer(zgcd(to_integer_primitive(a), to_integer_primitive(b)));
}

std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition(
    const RationalPolynomial& p) {
  RationalPolynomial q = make_monic(p);
  if (q.is_zero()) {
    throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  }
  std::vector<std::pair<RationalPolynomial, int>> out;
  if (q.degree() < 1) return out;

  // Yun's algorithm.
  const RationalPolynomial dq = poly_derivative(q);
  RationalPolynomial g = poly_gcd(q, dq);
  if (g.degree() == 0) {
    out.emplace_back(q, 1);
    return out;
  }
  RationalPolynomial w = poly_divexact(q, g);
  RationalPolynomial y = poly_divexact(dq, g);
  RationalPolynomial z = poly_sub(y, poly_derivative(w));
  int i = 1;
  while (w.degree() > 0) {
    RationalPolynomial h = z.is_zero() ? make_monic(w) : poly_gcd(w, z);
    if (h.degree() > 0) out.emplace_back(h, i);
    w = poly_divexact(w, h);
    y = z.is_zero() ? z : poly_divexact(z, h);
    z = poly_sub(y, poly_derivative(w));
    ++i;
  }
  return out;
}

std::vector<std::pair<double, int>> real_roots_exact(const RationalPolynomial& p) {
  RationalPolynomial q = p;
  q.trim();
  if (q.is_zero()) throw std::invalid_argument("real_roots_exact: zero polynomial");
  std::vector<std::pair<double, int>> out;
  for (const auto& [factor, mult] : squarefree_decomposition(q)) {
    std::vector<double> roots;
    squarefree_real_roots(factor, roots);
    for (const double r : roots) out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Exact Hamiltonian and the Faddeev-LeVerrier characteristic polynomial
// ---------------------------------------------------------------------------

void RationalModelConfig::validate() const {
  if (n_spins < 1) throw std::invalid_argument("RationalModelConfig: n_spins must be >= 1");
  if (n_spins > 6) {
    throw std::invalid_argument(
        "RationalModelConfig: the exact path supports up to 6 spins (dim 128)");
  }
  if (coupled_site < 1 || coupled_site > n_spins) {
    throw std::invalid_argument("RationalModelConfig: coupled_site outside [1, n_spins]");
  }
  if (topology == Topology::Closed && n_spins < 3) {
    throw std::invalid_argument("RationalModelConfig: closed topology requires n_spins >= 3");
  }
}

ModelConfig RationalModelConfig::to_double() const {
  return {n_spins, topology, coupled_site, mpq_class(g).get_d(), mpq_class(j).get_d()};
}

namespace {

RationalMatrix chain_term_exact(Generator field_op,
                                std::initializer_list<std::pair<int, Generator>> site_ops,
                                int n_spins) {
  RationalMatrix out = rational_generator(field_op);
  for (int s = 1; s <= n_spins; ++s) {
    Generator slot = Generator::Identity;
    for (const auto& [site, op] : site_ops) {
      if (site == s) slot = op;
    }
    out = kron(out, rational_generator(slot));
  }
  return out;
}

void accumulate(RationalMatrix& dest, const Rational& coef, const RationalMatrix& term) {
  for (std::size_t r = 0; r < dest.rows(); ++r) {
    for (std::size_t c = 0; c < dest.cols(); ++c) {
      if (term(r, c) != 0) dest(r, c) += coef * term(r, c);
    }
  }
}

}  // namespace

RationalMatrix build_hamiltonian_exact(const RationalModelConfig& config) {
  config.validate();
  const int n = config.n_spins;
  const int k = config.coupled_site;
  const std::size_t dim = std::size_t{1} << (n + 1);

  RationalMatrix h(dim, dim);
  accumulate(h, config.g, chain_term_exact(Generator::A, {{k, Generator::SigmaPlus}}, n));
  accumulate(h, config.g, chain_term_exact(Generator::ADagger, {{k, Generator::SigmaMinus}}, n));
  auto add_bond = [&](int i, int j) {
    accumulate(h, -config.j,
               chain_term_exact(Generator::Identity,
                                {{i, Generator::SigmaPlus}, {j, Generator::SigmaMinus}}, n));
    accumulate(h, -config.j,
               chain_term_exact(Generator::Identity,
                                {{i, Generator::SigmaMinus}, {j, Generator::SigmaPlus}}, n));
  };
  for (int i = 1; i < n; ++i) add_bond(i, i + 1);
  if (config.topology == Topology::Closed) add_bond(n, 1);
  return h;
}

RationalPolynomial charpoly_exact(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly_exact: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("charpoly_exact: empty matrix");

  // Clear denominators: A = den * m is an integer matrix, and
  // det(E I - m) = den^-n det(den E I - A).
  BigInt den = 1;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den().get_mpz_t());
    }
  }
  std::vector<BigInt> a(n * n);
  std::vector<std::vector<std::pair<std::size_t, const BigInt*>>> sparse_rows(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& q = m(r, c);
      a[r * n + c] = q.get_num() * (den / q.get_den());
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a[r * n + c] != 0) sparse_rows[r].emplace_back(c, &a[r * n + c]);
    }
  }

  // Faddeev-LeVerrier over integers: B_1 = I, c_{n-k} = -tr(A B_k)/k,
  // B_{k+1} = A B_k + c_{n-k} I. Every division is exact.
  std::vector<BigInt> b(n * n);
  for (std::size_t i = 0; i < n; ++i) b[i * n + i] = 1;
  std::vector<BigInt> prod(n * n);
  std::vector<BigInt> coeff(n + 1);
  coeff[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) prod[r * n + c] = 0;
      for (const auto& [t, val] : sparse_rows[r]) {
        const BigInt& v = *val;
        for (std::size_t c = 0; c < n; ++c) {
          if (b[t * n + c] != 0) prod[r * n + c] += v * b[t * n + c];
        }
      }
    }
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += prod[i * n + i];
    const BigInt kk(static_cast<unsigned long>(k));
    if (!mpz_divisible_p(tr.get_mpz_t(), kk.get_mpz_t())) {
      throw std::logic_error("charpoly_exact: trace not divisible in the recurrence");
    }
    BigInt c;
    mpz_divexact(c.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
    c = -c;
    coeff[n - k] = c;
    if (k < n) {
      std::swap(b, prod);
      for (std::size_t i = 0; i < n; ++i) b[i * n + i] += c;
    } else {
      // Cayley-Hamilton residual B_{n+1} = A B_n + c_0 I must vanish.
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t col = 0; col < n; ++col) {
          const BigInt expect = (r == col) ? -c : BigInt(0);
          if (prod[r * n + col] != expect) {
            throw std::logic_error("charpoly_exact: Cayley-Hamilton residual is nonzero");
          }
        }
      }
    }
  }

  RationalPolynomial p;
  p.coefficients.resize(n + 1);
  BigInt dpow = 1;  // den^(n-k)
  for (int k = static_cast<int>(n); k >= 0; --k) {
    Rational q(coeff[k], dpow);
    q.canonicalize();
    p.coefficients[k] = q;
    dpow *= den;
  }
  return p;
}

RationalPolynomial expand_factored(const RationalFactoredPoly& p) {
  RationalPolynomial acc;
  acc.coefficients = {Rational(1)};
  for (const auto& factor : p.factors) {
    if (factor.coefficients.empty() || factor.exponent < 1) {
      throw std::invalid_argument("expand_factored: malformed factor");
    }
    RationalPolynomial base;
    base.coefficients = factor.coefficients;
    base.trim();
    for (int e = 0; e < factor.exponent; ++e) acc = poly_mul(acc, base);
  }
  return acc;
}

std::string FactorizationCertificate::to_report() const {
  std::ostringstream os;
  if (equal) {
    os << "certificate: exact match, coefficient for coefficient";
  } else {
    os << "certificate: MISMATCH at E^" << mismatch_power << ": charpoly coefficient "
       << lhs.get_str() << " vs factored form " << rhs.get_str();
  }
  return os.str();
}

FactorizationCertificate certify_factorization(const RationalModelConfig& config,
                                               const RationalFactoredPoly& claimed) {
  config.validate();
  if (config.n_spins != 4) {
    throw std::invalid_argument("certify_factorization: requires a 4-spin chain");
  }
  const RationalPolynomial lhs = charpoly_exact(build_hamiltonian_exact(config));
  const RationalPolynomial rhs = expand_factored(claimed);

  FactorizationCertificate cert;
  const int top = std::max(lhs.degree(), rhs.degree());
  for (int k = 0; k <= top; ++k) {
    const Rational cl = k <= lhs.degree() ? lhs.coefficients[k] : Rational(0);
    const Rational cr = k <= rhs.degree() ? rhs.coefficients[k] : Rational(0);
    if (cl != cr) {
      cert.equal = false;
      cert.mismatch_power = k;
      cert.lhs = cl;
      cert.rhs = cr;
      return cert;
    }
  }
  cert.equal = true;
  return cert;
}

std::vector<std::pair<Rational, Rational>> certification_sample_points() {
  auto q = [](long n, long d) { return make_q(n, d); };
  return {
      // both axes and the origin
      {q(0, 1), q(0, 1)},
      {q(1, 1), q(0, 1)},
      {q(-1, 1), q(0, 1)},
      {q(5, 3), q(0, 1)},
      {q(0, 1), q(1, 1)},
      {q(0, 1), q(-1, 1)},
      {q(0, 1), q(3, 2)},
      // mixed signs, varied denominators
      {q(1, 1), q(1, 1)},
      {q(1, 1), q(-1, 1)},
      {q(-1, 1), q(1, 1)},
      {q(-1, 1), q(-1, 1)},
      {q(1, 2), q(1, 3)},
      {q(-1, 2), q(2, 3)},
      {q(3, 2), q(-5, 7)},
      {q(-4, 3), q(-3, 5)},
      {q(2, 1), q(1, 1)},
      {q(1, 1), q(2, 1)},
      {q(-2, 1), q(1, 2)},
      {q(7, 5), q(-2, 3)},
      {q(-1, 7), q(8, 5)},
      {q(5, 4), q(5, 4)},
      {q(-9, 8), q(1, 16)},
      {q(1, 10), q(-10, 7)},
      {q(11, 6), q(13, 9)},
      {q(-13, 7), q(-17, 11)},
  };
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("parse_rational: empty input");

  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    if (s.find('.') != std::string::npos) {
      throw std::invalid_argument("parse_rational: mixed decimal and fraction: " + text);
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) {
      throw std::invalid_argument("parse_rational: malformed fraction: " + text);
    }
    if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator: " + text);
    r.canonicalize();
    return r;
  }

  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    BigInt n;
    if (mpz_set_str(n.get_mpz_t(), s.c_str(), 10) != 0) {
      throw std::invalid_argument("parse_rational: malformed integer: " + text);
    }
    return Rational(n);
  }

  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  const std::size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+") {
    throw std::invalid_argument("parse_rational: malformed decimal: " + text);
  }
  BigInt num;
  if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0) {
    throw std::invalid_argument("parse_rational: malformed decimal: " + text);
  }
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace jcxy
