#include "jcxy/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace jcxy {

namespace {

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void check_non_empty(const SweepTable& table) {
  if (table.rows.empty()) throw std::invalid_argument("emit: empty sweep table");
  for (const auto& row : table.rows) {
    if (row.levels.empty()) {
      throw std::invalid_argument("emit: row at phi=" + format_real(row.phi) + " has no levels");
    }
  }
}

std::string emit_csv(const SweepTable& table) {
  std::ostringstream os;
  os << "phi,level_index,energy,multiplicity\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.levels.size(); ++i) {
      os << format_real(row.phi) << ',' << i << ',' << format_real(row.levels[i].energy) << ','
         << row.levels[i].multiplicity << '\n';
    }
  }
  return os.str();
}

std::string emit_json(const SweepTable& table) {
  nlohmann::json out;
  out["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& level : row.levels) {
      levels.push_back({{"energy", level.energy}, {"multiplicity", level.multiplicity}});
    }
    out["rows"].push_back({{"phi", row.phi}, {"levels", std::move(levels)}});
  }
  return out.dump();
}

std::string emit_gnuplot(const SweepTable& table) {
  std::size_t max_levels = 0;
  for (const auto& row : table.rows) max_levels = std::max(max_levels, row.levels.size());

  std::ostringstream os;
  os << "# energy levels against phi; columns: phi level_index energy multiplicity\n";
  os << "$levels << EOD\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.levels.size(); ++i) {
      os << format_real(row.phi) << ' ' << i << ' ' << format_real(row.levels[i].energy) << ' '
         << row.levels[i].multiplicity << '\n';
    }
  }
  os << "EOD\n";
  os << "set xlabel 'phi'\n";
  os << "set ylabel 'energy'\n";
  os << "plot for [i=0:" << max_levels - 1
     << "] $levels using 1:($2==i ? $3 : 1/0) with lines title sprintf('level %d', i)\n";
  return os.str();
}

}  // namespace

void SweepSpec::validate() const {
  if (!(c > 0.0)) throw std::invalid_argument("SweepSpec: c must be > 0");
  if (n_points < 1) throw std::invalid_argument("SweepSpec: n_points must be >= 1");
  if (!std::isfinite(phi_min) || !std::isfinite(phi_max)) {
    throw std::invalid_argument("SweepSpec: phi range must be finite");
  }
  if (n_points == 1) {
    if (phi_min != phi_max) {
      throw std::invalid_argument("SweepSpec: a single-point sweep needs phi_min == phi_max");
    }
  } else if (!(phi_min < phi_max)) {
    throw std::invalid_argument("SweepSpec: phi_min must be < phi_max");
  }
  config_template.with_couplings(0.0, 0.0).validate();
}

std::vector<double> SweepSpec::phi_grid() const {
  validate();
  std::vector<double> grid(n_points);
  if (n_points == 1) {
    grid[0] = phi_min;
    return grid;
  }
  const double step = (phi_max - phi_min) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) grid[i] = phi_min + i * step;
  return grid;
}

SweepTable sweep_phi(const SweepSpec& spec, double conv_tol, std::optional<double> cluster_tol) {
  SweepTable table;
  for (const double phi : spec.phi_grid()) {
    const ModelConfig config =
        spec.config_template.with_couplings(spec.c * std::cos(phi), spec.c * std::sin(phi));
    try {
      Spectrum s = spectrum_of(config, conv_tol, cluster_tol);
      table.rows.push_back({phi, std::move(s.levels)});
    } catch (const std::exception& e) {
      throw std::runtime_error("sweep_phi: row at phi=" + format_real(phi) +
                               " failed: " + e.what());
    }
  }
  return table;
}

std::string emit(const SweepTable& table, EmitFormat format) {
  check_non_empty(table);
  switch (format) {
    case EmitFormat::Csv:
      return emit_csv(table);
    case EmitFormat::Json:
      return emit_json(table);
    case EmitFormat::Gnuplot:
      return emit_gnuplot(table);
  }
  throw std::logic_error("emit: unhandled format");
}

SweepTable parse_sweep_json(const std::string& text) {
  const nlohmann::json in = nlohmann::json::parse(text);
  SweepTable table;
  for (const auto& row : in.at("rows")) {
    SweepRow r;
    r.phi = row.at("phi").get<double>();
    for (const auto& level : row.at("levels")) {
      r.levels.push_back(
          {level.at("energy").get<double>(), level.at("multiplicity").get<int>()});
    }
    table.rows.push_back(std::move(r));
  }
  return table;
}

}  // namespace jcxy
