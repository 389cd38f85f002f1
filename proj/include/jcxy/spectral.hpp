#pragma once

#include <optional>
#include <vector>

#include "jcxy/model.hpp"

namespace jcxy {

inline constexpr double kDefaultConvTol = 1e-12;

struct Level {
  double energy = 0.0;
  int multiplicity = 0;
};

// Sorted eigenvalues plus their clustering into degenerate levels. Within a
// level the member spread is at most cluster_tol; consecutive levels are
// separated by more than cluster_tol.
struct Spectrum {
  std::vector<double> eigenvalues;
  std::vector<Level> levels;
  double cluster_tol = 0.0;
  std::optional<ModelConfig> config;  // provenance when built by spectrum_of
};

// All eigenvalues of a symmetric matrix, ascending. Orthogonal reduction to
// tridiagonal form followed by implicitly shifted iterations (Eigen's
// SelfAdjointEigenSolver). Input must be symmetric within 1e-14 absolute.
// For moderate dimensions the backward-error contract
// |M v - lambda v| <= conv_tol * |M|_2 is verified per eigenpair.
std::vector<double> eigen_symmetric(const DenseRealMatrix& m, double conv_tol = kDefaultConvTol);

// Greedy left-to-right clustering of a sorted sequence: a new level starts
// when the gap to the previous eigenvalue exceeds cluster_tol; the level
// energy is the mean of its members.
Spectrum cluster_degeneracies(const std::vector<double>& eigs, double cluster_tol);

// Cluster tolerance used when none is given: 1e-9 * max(1, max|H_ij|).
double default_cluster_tol(const DenseRealMatrix& h);

Spectrum spectrum_of(const ModelConfig& config, double conv_tol = kDefaultConvTol,
                     std::optional<double> cluster_tol = std::nullopt);

}  // namespace jcxy
