#pragma once

#include "jcxy/operators.hpp"

namespace jcxy {

enum class Topology { Open, Closed };

const char* to_string(Topology t);

// Chain geometry and couplings. G is the light-spin coupling at site
// coupled_site, J the nearest-neighbor exchange (J > 0 ferromagnetic,
// J < 0 antiferromagnetic). Closed chains need at least three sites,
// otherwise the wrap-around bond would duplicate an existing one.
struct ModelConfig {
  int n_spins = 1;
  Topology topology = Topology::Open;
  int coupled_site = 1;
  double g = 0.0;
  double j = 0.0;

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;
  Eigen::Index dim() const { return Eigen::Index{1} << (n_spins + 1); }
};

// Exactly symmetric, zero-diagonal matrix of dimension 2^(N+1).
struct Hamiltonian {
  ModelConfig config;
  DenseRealMatrix matrix;
};

// H = G (a sigma_k^+ + a^dag sigma_k^-)
//     - J sum_i (sigma_i^+ sigma_{i+1}^- + sigma_i^- sigma_{i+1}^+),
// with the (N,1) bond added for closed topology. hbar = 1 throughout.
Hamiltonian build_hamiltonian(const ModelConfig& config);

// (1/2) sum_i sigma_i^z on the full space; diagonal, entries in
// {-N/2, ..., +N/2}. Commutes with H only at G = 0.
DenseRealMatrix total_sz_operator(int n_spins);

// Photon number plus number of up spins; diagonal with integer entries in
// [0, N+1]. Commutes with H for every coupling and topology.
DenseRealMatrix excitation_number_operator(int n_spins);

DenseRealMatrix commutator(const DenseRealMatrix& a, const DenseRealMatrix& b);

}  // namespace jcxy
