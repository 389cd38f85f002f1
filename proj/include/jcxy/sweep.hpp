#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "jcxy/spectral.hpp"

namespace jcxy {

// Chain geometry for a sweep; the couplings come from the circle
// G = C cos(phi), J = C sin(phi).
struct ConfigTemplate {
  int n_spins = 4;
  Topology topology = Topology::Open;
  int coupled_site = 1;

  ModelConfig with_couplings(double g, double j) const {
    return {n_spins, topology, coupled_site, g, j};
  }
};

// Default range covers the AFM region (-pi/2, 0), the FM region (0, pi/2),
// and the formally negative-G region beyond pi/2.
inline constexpr double kDefaultPhiMin = -std::numbers::pi / 2;
inline constexpr double kDefaultPhiMax = std::numbers::pi;
inline constexpr int kDefaultSweepPoints = 601;

struct SweepSpec {
  double c = 1.0;
  int n_points = kDefaultSweepPoints;
  double phi_min = kDefaultPhiMin;
  double phi_max = kDefaultPhiMax;
  ConfigTemplate config_template;

  // n_points >= 2 spans [phi_min, phi_max] inclusively with a uniform grid;
  // n_points == 1 is the single point phi_min (and phi_min must equal
  // phi_max). Throws std::invalid_argument otherwise.
  void validate() const;
  std::vector<double> phi_grid() const;
};

struct SweepRow {
  double phi = 0.0;
  std::vector<Level> levels;
};

struct SweepTable {
  std::vector<SweepRow> rows;
};

SweepTable sweep_phi(const SweepSpec& spec, double conv_tol = kDefaultConvTol,
                     std::optional<double> cluster_tol = std::nullopt);

enum class EmitFormat { Csv, Json, Gnuplot };

// csv: header `phi,level_index,energy,multiplicity`, 17-significant-digit
// reals, LF line endings. json mirrors the SweepTable fields. gnuplot is an
// inline data block plus a script plotting energy against phi per level
// index. Rejects empty tables and rows without levels.
std::string emit(const SweepTable& table, EmitFormat format);

// Inverse of emit(..., Json); doubles round-trip bit-exactly.
SweepTable parse_sweep_json(const std::string& text);

}  // namespace jcxy
