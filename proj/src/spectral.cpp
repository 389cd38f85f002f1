#include "jcxy/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace jcxy {

namespace {

// Up to this dimension the solve keeps eigenvectors and checks residuals;
// above it only eigenvalues are computed and backward stability is relied on.
constexpr Eigen::Index kResidualCheckDim = 512;

}  // namespace

std::vector<double> eigen_symmetric(const DenseRealMatrix& m, double conv_tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigen_symmetric: matrix must be square");
  if (!(conv_tol > 0.0)) throw std::invalid_argument("eigen_symmetric: conv_tol must be > 0");
  const Eigen::Index n = m.rows();
  if (n == 0) return {};
  if (!m.allFinite()) throw std::invalid_argument("eigen_symmetric: matrix has non-finite entries");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-14) {
    throw std::invalid_argument("eigen_symmetric: matrix not symmetric within 1e-14 absolute");
  }

  Eigen::SelfAdjointEigenSolver<DenseRealMatrix> solver;
  if (n <= kResidualCheckDim) {
    solver.compute(m);
  } else {
    solver.compute(m, Eigen::EigenvaluesOnly);
  }
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigen_symmetric: iteration cap exceeded without convergence (dim " +
                             std::to_string(n) + ")");
  }
  const Eigen::VectorXd& lam = solver.eigenvalues();
  if (n <= kResidualCheckDim) {
    // |M|_2 of a symmetric matrix is its largest absolute eigenvalue.
    const double norm2 = std::max(std::abs(lam(0)), std::abs(lam(n - 1)));
    const double resid =
        (m * solver.eigenvectors() - solver.eigenvectors() * lam.asDiagonal())
            .colwise()
            .norm()
            .maxCoeff();
    if (resid > conv_tol * norm2) {
      throw std::runtime_error("eigen_symmetric: residual " + std::to_string(resid) +
                               " exceeds conv_tol * |M| = " + std::to_string(conv_tol * norm2));
    }
  }
  return {lam.data(), lam.data() + n};
}

Spectrum cluster_degeneracies(const std::vector<double>& eigs, double cluster_tol) {
  if (!(cluster_tol > 0.0)) {
    throw std::invalid_argument("cluster_degeneracies: cluster_tol must be > 0");
  }
  for (std::size_t i = 1; i < eigs.size(); ++i) {
    if (eigs[i] < eigs[i - 1]) {
      throw std::invalid_argument("cluster_degeneracies: input not sorted ascending");
    }
  }
  Spectrum s;
  s.eigenvalues = eigs;
  s.cluster_tol = cluster_tol;
  std::size_t i = 0;
  while (i < eigs.size()) {
    std::size_t j = i + 1;
    double sum = eigs[i];
    while (j < eigs.size() && eigs[j] - eigs[j - 1] <= cluster_tol) {
      sum += eigs[j];
      ++j;
    }
    s.levels.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
    i = j;
  }
  return s;
}

double default_cluster_tol(const DenseRealMatrix& h) {
  const double hmax = h.size() == 0 ? 0.0 : h.cwiseAbs().maxCoeff();
  return 1e-9 * std::max(1.0, hmax);
}

Spectrum spectrum_of(const ModelConfig& config, double conv_tol,
                     std::optional<double> cluster_tol) {
  const Hamiltonian h = build_hamiltonian(config);
  const double tol = cluster_tol.value_or(default_cluster_tol(h.matrix));
  Spectrum s = cluster_degeneracies(eigen_symmetric(h.matrix, conv_tol), tol);
  s.config = config;
  return s;
}

}  // namespace jcxy
