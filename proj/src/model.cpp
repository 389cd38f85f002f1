#include "jcxy/model.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>

namespace jcxy {

namespace {

// One tensor-product term: field_op on the photon slot, the listed
// generators on their sites, identity everywhere else. Products of embedded
// operators on disjoint slots reduce to exactly this chain.
DenseRealMatrix chain_term(Generator field_op,
                           std::initializer_list<std::pair<int, Generator>> site_ops,
                           int n_spins) {
  const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
  DenseRealMatrix out = generator(field_op).real_matrix();
  for (int s = 1; s <= n_spins; ++s) {
    Eigen::Matrix2d slot = id;
    for (const auto& [site, op] : site_ops) {
      if (site == s) slot = generator(op).real_matrix();
    }
    out = kron(out, slot, kDefaultDimCap);
  }
  return out;
}

void check_spin_count(int n_spins) {
  if (n_spins < 1) throw std::invalid_argument("n_spins must be >= 1");
  if (n_spins + 1 >= 62 || (Eigen::Index{1} << (n_spins + 1)) > kDefaultDimCap) {
    throw std::invalid_argument("n_spins=" + std::to_string(n_spins) +
                                " exceeds the dense dimension cap " +
                                std::to_string(kDefaultDimCap));
  }
}

}  // namespace

const char* to_string(Topology t) { return t == Topology::Open ? "open" : "closed"; }

void ModelConfig::validate() const {
  check_spin_count(n_spins);
  if (coupled_site < 1 || coupled_site > n_spins) {
    throw std::invalid_argument("ModelConfig: coupled_site " + std::to_string(coupled_site) +
                                " outside [1, " + std::to_string(n_spins) + "]");
  }
  if (topology == Topology::Closed && n_spins < 3) {
    throw std::invalid_argument(
        "ModelConfig: closed topology requires n_spins >= 3 (the wrap-around bond would"
        " duplicate an existing bond)");
  }
  if (!std::isfinite(g) || !std::isfinite(j)) {
    throw std::invalid_argument("ModelConfig: couplings g, j must be finite");
  }
}

Hamiltonian build_hamiltonian(const ModelConfig& config) {
  config.validate();
  const int n = config.n_spins;
  const int k = config.coupled_site;

  DenseRealMatrix h = config.g * (chain_term(Generator::A, {{k, Generator::SigmaPlus}}, n) +
                                  chain_term(Generator::ADagger, {{k, Generator::SigmaMinus}}, n));

  auto bond = [n](int i, int j) -> DenseRealMatrix {
    return chain_term(Generator::Identity,
                      {{i, Generator::SigmaPlus}, {j, Generator::SigmaMinus}}, n) +
           chain_term(Generator::Identity,
                      {{i, Generator::SigmaMinus}, {j, Generator::SigmaPlus}}, n);
  };
  for (int i = 1; i < n; ++i) h -= config.j * bond(i, i + 1);
  if (config.topology == Topology::Closed) h -= config.j * bond(n, 1);

  return {config, std::move(h)};
}

DenseRealMatrix total_sz_operator(int n_spins) {
  check_spin_count(n_spins);
  const Eigen::Index dim = Eigen::Index{1} << (n_spins + 1);
  const std::uint64_t spin_mask = (std::uint64_t{1} << n_spins) - 1;
  DenseRealMatrix m = DenseRealMatrix::Zero(dim, dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    // Spin bit 1 means |down>; the field bit is above the spin bits.
    const int down = std::popcount(static_cast<std::uint64_t>(idx) & spin_mask);
    m(idx, idx) = 0.5 * n_spins - down;
  }
  return m;
}

DenseRealMatrix excitation_number_operator(int n_spins) {
  check_spin_count(n_spins);
  const Eigen::Index dim = Eigen::Index{1} << (n_spins + 1);
  const std::uint64_t spin_mask = (std::uint64_t{1} << n_spins) - 1;
  DenseRealMatrix m = DenseRealMatrix::Zero(dim, dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    const int photon = static_cast<int>(idx >> n_spins) & 1;
    const int down = std::popcount(static_cast<std::uint64_t>(idx) & spin_mask);
    m(idx, idx) = photon + (n_spins - down);
  }
  return m;
}

DenseRealMatrix commutator(const DenseRealMatrix& a, const DenseRealMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw std::invalid_argument("commutator: dimensions must match and be square");
  }
  return a * b - b * a;
}

}  // namespace jcxy
