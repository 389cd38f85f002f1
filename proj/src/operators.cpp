#include "jcxy/operators.hpp"

#include <stdexcept>
#include <string>

namespace jcxy {

namespace {

using Complex = std::complex<double>;

SmallOperator make2x2(Complex a00, Complex a01, Complex a10, Complex a11) {
  SmallOperator op;
  op.entries = {a00, a01, a10, a11};
  return op;
}

void check_embed_dims(int n_spins, Eigen::Index dim_cap) {
  if (n_spins < 1) throw std::invalid_argument("embed: n_spins must be >= 1");
  if (dim_cap < 2) throw std::invalid_argument("embed: dim_cap must be >= 2");
  if (n_spins + 1 >= 62 || (Eigen::Index{1} << (n_spins + 1)) > dim_cap) {
    throw std::invalid_argument("embed: dimension 2^(n_spins+1) exceeds cap " +
                                std::to_string(dim_cap) + " (n_spins=" + std::to_string(n_spins) +
                                ")");
  }
}

}  // namespace

bool SmallOperator::is_real() const {
  for (const auto& e : entries) {
    if (e.imag() != 0.0) return false;
  }
  return true;
}

Eigen::Matrix2d SmallOperator::real_matrix() const {
  if (!is_real()) {
    throw std::invalid_argument(
        "SmallOperator: complex-valued operator where a real one is required"
        " (sigma_y cannot enter an embedding)");
  }
  Eigen::Matrix2d m;
  m << entries[0].real(), entries[1].real(), entries[2].real(), entries[3].real();
  return m;
}

SmallOperator SmallOperator::transpose() const {
  return make2x2(entries[0], entries[2], entries[1], entries[3]);
}

SmallOperator generator(Generator name) {
  const Complex i{0.0, 1.0};
  switch (name) {
    case Generator::SigmaX:
      return make2x2(0, 1, 1, 0);
    case Generator::SigmaY:
      return make2x2(0, -i, i, 0);
    case Generator::SigmaZ:
      return make2x2(1, 0, 0, -1);
    case Generator::SigmaPlus:
      return make2x2(0, 1, 0, 0);
    case Generator::SigmaMinus:
      return make2x2(0, 0, 1, 0);
    case Generator::Identity:
      return make2x2(1, 0, 0, 1);
    case Generator::A:
      return make2x2(0, 1, 0, 0);
    case Generator::ADagger:
      return make2x2(0, 0, 1, 0);
  }
  throw std::logic_error("generator: unhandled name");
}

Eigen::Vector2d ket_zero() { return {1.0, 0.0}; }
Eigen::Vector2d ket_one() { return {0.0, 1.0}; }
Eigen::Vector2d ket_up() { return {1.0, 0.0}; }
Eigen::Vector2d ket_down() { return {0.0, 1.0}; }

DenseRealMatrix kron(const DenseRealMatrix& a, const DenseRealMatrix& b, Eigen::Index dim_cap) {
  if (!a.allFinite() || !b.allFinite()) {
    throw std::invalid_argument("kron: inputs must be finite");
  }
  if (dim_cap < 1) throw std::invalid_argument("kron: dim_cap must be positive");
  const long long rows = static_cast<long long>(a.rows()) * b.rows();
  const long long cols = static_cast<long long>(a.cols()) * b.cols();
  if (rows > dim_cap || cols > dim_cap) {
    throw std::invalid_argument("kron: result dimension " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " exceeds cap " + std::to_string(dim_cap));
  }
  DenseRealMatrix out(rows, cols);
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

DenseRealMatrix embed_site(const SmallOperator& op, int site, int n_spins, Eigen::Index dim_cap) {
  check_embed_dims(n_spins, dim_cap);
  if (site < 1 || site > n_spins) {
    throw std::invalid_argument("embed_site: site " + std::to_string(site) +
                                " outside [1, " + std::to_string(n_spins) + "]");
  }
  const Eigen::Matrix2d m = op.real_matrix();
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  DenseRealMatrix out = id;  // field slot
  for (int s = 1; s <= n_spins; ++s) {
    out = kron(out, s == site ? m : id, dim_cap);
  }
  return out;
}

DenseRealMatrix embed_field(const SmallOperator& op, int n_spins, Eigen::Index dim_cap) {
  check_embed_dims(n_spins, dim_cap);
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  DenseRealMatrix out = op.real_matrix();
  for (int s = 1; s <= n_spins; ++s) {
    out = kron(out, id, dim_cap);
  }
  return out;
}

}  // namespace jcxy
