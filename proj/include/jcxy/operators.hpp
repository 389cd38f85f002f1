#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>

namespace jcxy {

// Dense real operator on the photon+chain product space. Every matrix
// produced by the embedding helpers has power-of-two dimension.
using DenseRealMatrix = Eigen::MatrixXd;

// Default cap on embedded dimensions: 12 spins + photon = 2^13. The dense
// storage and O(dim^3) eigensolve stay desk-scale below this.
inline constexpr Eigen::Index kDefaultDimCap = 8192;

enum class Generator {
  SigmaX,
  SigmaY,
  SigmaZ,
  SigmaPlus,
  SigmaMinus,
  Identity,
  A,
  ADagger,
};

// 2x2 generator acting on a single slot. Slot bases are ordered (|0>, |1>)
// for the field and (|up>, |down>) for a spin. Only sigma_y is complex; it
// exists for the sigma^pm = (sigma^x -+ i sigma^y)/2 identities and is
// rejected by the embedding helpers.
struct SmallOperator {
  std::array<std::complex<double>, 4> entries{};  // row-major

  std::complex<double> operator()(int row, int col) const { return entries[2 * row + col]; }
  std::complex<double>& operator()(int row, int col) { return entries[2 * row + col]; }

  bool is_real() const;
  // The 2x2 real matrix; throws std::invalid_argument on a complex operator.
  Eigen::Matrix2d real_matrix() const;
  SmallOperator transpose() const;
};

SmallOperator generator(Generator name);

// Single-slot basis kets: field |0>,|1> and spin |up>,|down>.
Eigen::Vector2d ket_zero();
Eigen::Vector2d ket_one();
Eigen::Vector2d ket_up();
Eigen::Vector2d ket_down();

// Kronecker product with the leftmost factor slowest-varying. Inputs must be
// finite; the result's row and column counts must not exceed dim_cap.
DenseRealMatrix kron(const DenseRealMatrix& a, const DenseRealMatrix& b,
                     Eigen::Index dim_cap = kDefaultDimCap);

// I_field x I x ... x op (at `site`, 1-based) x ... x I, dim 2^(n_spins+1).
DenseRealMatrix embed_site(const SmallOperator& op, int site, int n_spins,
                           Eigen::Index dim_cap = kDefaultDimCap);

// op acting on the leading field slot: op x I_{2^n_spins}.
DenseRealMatrix embed_field(const SmallOperator& op, int n_spins,
                            Eigen::Index dim_cap = kDefaultDimCap);

}  // namespace jcxy
