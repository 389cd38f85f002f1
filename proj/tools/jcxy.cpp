#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "jcxy/exact_poly.hpp"
#include "jcxy/model.hpp"
#include "jcxy/spectral.hpp"
#include "jcxy/sweep.hpp"
#include "jcxy/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArguments = 2;

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double parse_coupling(const std::string& text) {
  return mpq_class(jcxy::parse_rational(text)).get_d();
}

void write_output(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  file << payload;
}

struct SpectrumArgs {
  int spins = 4;
  std::string topology = "open";
  int site = 1;
  std::string g = "1";
  std::string j = "0";
  double tol_conv = jcxy::kDefaultConvTol;
  double tol_cluster = 0.0;  // 0 = automatic
  std::string format = "text";
  std::string out;
};

struct SweepArgs {
  int spins = 4;
  std::string topology = "open";
  int site = 1;
  double c = 1.0;
  int points = jcxy::kDefaultSweepPoints;
  double phi_min = jcxy::kDefaultPhiMin;
  double phi_max = jcxy::kDefaultPhiMax;
  double tol_conv = jcxy::kDefaultConvTol;
  double tol_cluster = 0.0;
  std::string format = "csv";
  std::string out;
};

struct CharpolyArgs {
  int spins = 4;
  std::string topology = "open";
  int site = 1;
  std::string g = "1";
  std::string j = "0";
  std::string out;
};

struct VerifyArgs {
  std::string scope = "all";
  std::uint64_t seed = 12345;
  std::string out;
};

jcxy::Topology parse_topology(const std::string& name) {
  if (name == "open") return jcxy::Topology::Open;
  if (name == "closed") return jcxy::Topology::Closed;
  throw CLI::ValidationError("--topology", "must be 'open' or 'closed'");
}

std::optional<double> cluster_option(double tol_cluster) {
  if (tol_cluster == 0.0) return std::nullopt;
  return tol_cluster;
}

int run_spectrum(const SpectrumArgs& args) {
  const jcxy::ModelConfig config{args.spins, parse_topology(args.topology), args.site,
                                 parse_coupling(args.g), parse_coupling(args.j)};
  const jcxy::Spectrum s =
      jcxy::spectrum_of(config, args.tol_conv, cluster_option(args.tol_cluster));

  std::ostringstream os;
  if (args.format == "text") {
    os << "# N=" << config.n_spins << " topology=" << to_string(config.topology)
       << " site=" << config.coupled_site << " G=" << format_real(config.g)
       << " J=" << format_real(config.j) << '\n';
    os << "# dim=" << s.eigenvalues.size() << " levels=" << s.levels.size()
       << " cluster_tol=" << format_real(s.cluster_tol) << '\n';
    for (const auto& level : s.levels) {
      os << format_real(level.energy) << ' ' << level.multiplicity << '\n';
    }
  } else if (args.format == "csv") {
    os << "level_index,energy,multiplicity\n";
    for (std::size_t i = 0; i < s.levels.size(); ++i) {
      os << i << ',' << format_real(s.levels[i].energy) << ',' << s.levels[i].multiplicity
         << '\n';
    }
  } else if (args.format == "json") {
    nlohmann::json out;
    out["config"] = {{"n_spins", config.n_spins},
                     {"topology", to_string(config.topology)},
                     {"coupled_site", config.coupled_site},
                     {"g", config.g},
                     {"j", config.j}};
    out["cluster_tol"] = s.cluster_tol;
    out["eigenvalues"] = s.eigenvalues;
    out["levels"] = nlohmann::json::array();
    for (const auto& level : s.levels) {
      out["levels"].push_back({{"energy", level.energy}, {"multiplicity", level.multiplicity}});
    }
    os << out.dump() << '\n';
  } else {
    throw CLI::ValidationError("--format", "spectrum supports text, csv, json");
  }
  write_output(os.str(), args.out);
  return kExitOk;
}

int run_sweep(const SweepArgs& args) {
  jcxy::SweepSpec spec;
  spec.c = args.c;
  spec.n_points = args.points;
  spec.phi_min = args.phi_min;
  spec.phi_max = args.phi_max;
  spec.config_template = {args.spins, parse_topology(args.topology), args.site};

  jcxy::EmitFormat format;
  if (args.format == "csv") {
    format = jcxy::EmitFormat::Csv;
  } else if (args.format == "json") {
    format = jcxy::EmitFormat::Json;
  } else if (args.format == "gnuplot") {
    format = jcxy::EmitFormat::Gnuplot;
  } else {
    throw CLI::ValidationError("--format", "sweep supports csv, json, gnuplot");
  }

  const jcxy::SweepTable table =
      jcxy::sweep_phi(spec, args.tol_conv, cluster_option(args.tol_cluster));
  write_output(jcxy::emit(table, format), args.out);
  return kExitOk;
}

int run_charpoly(const CharpolyArgs& args) {
  const jcxy::RationalModelConfig config{args.spins, parse_topology(args.topology), args.site,
                                         jcxy::parse_rational(args.g),
                                         jcxy::parse_rational(args.j)};
  const jcxy::RationalPolynomial p =
      jcxy::charpoly_exact(jcxy::build_hamiltonian_exact(config));

  std::ostringstream os;
  os << "# exact characteristic polynomial det(E*I - H), N=" << config.n_spins
     << " topology=" << to_string(config.topology) << " site=" << config.coupled_site
     << " G=" << mpq_class(config.g).get_str() << " J=" << mpq_class(config.j).get_str() << '\n';
  for (int k = p.degree(); k >= 0; --k) {
    if (p.coefficients[k] == 0) continue;
    os << "E^" << k << ": " << p.coefficients[k].get_str() << '\n';
  }
  write_output(os.str(), args.out);
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  static const std::map<std::string, jcxy::VerifyScope> scopes = {
      {"eq5", jcxy::VerifyScope::LevelsOpenEdge},
      {"eq7", jcxy::VerifyScope::CharpolyOpenSecond},
      {"eq8", jcxy::VerifyScope::CharpolyClosed},
      {"invariants", jcxy::VerifyScope::Invariants},
      {"all", jcxy::VerifyScope::All},
  };
  const auto it = scopes.find(args.scope);
  if (it == scopes.end()) {
    throw CLI::ValidationError("--scope", "must be one of eq5, eq7, eq8, invariants, all");
  }
  const jcxy::VerifyReport report = jcxy::run_verify(it->second, args.seed);
  write_output(report.to_text(), args.out);
  return report.failed_count() == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "jcxy: energy spectra of a spin-1/2 XY chain coupled to a single photon mode\n"
      "at one site; polar coupling sweeps, exact characteristic polynomials, and a\n"
      "verification suite for the 4-spin closed forms."};
  app.require_subcommand(1);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and degenerate levels");
  spectrum->add_option("--spins", spectrum_args.spins, "Number of spins N")->required();
  spectrum->add_option("--topology", spectrum_args.topology, "open|closed");
  spectrum->add_option("--site", spectrum_args.site, "Photon-coupled site k (1-based)");
  spectrum->add_option("--g", spectrum_args.g, "Light-spin coupling G (decimal or p/q)");
  spectrum->add_option("--j", spectrum_args.j, "Exchange coupling J (decimal or p/q)");
  spectrum->add_option("--tol-conv", spectrum_args.tol_conv, "Eigensolver backward-error bound");
  spectrum->add_option("--tol-cluster", spectrum_args.tol_cluster,
                       "Degeneracy clustering tolerance (0 = 1e-9*max(1,|H|_max))");
  spectrum->add_option("--format", spectrum_args.format, "text|csv|json");
  spectrum->add_option("--out", spectrum_args.out, "Output file (default stdout)");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Polar sweep G=C cos(phi), J=C sin(phi)");
  sweep->add_option("--spins", sweep_args.spins, "Number of spins N");
  sweep->add_option("--topology", sweep_args.topology, "open|closed");
  sweep->add_option("--site", sweep_args.site, "Photon-coupled site k (1-based)");
  sweep->add_option("--c", sweep_args.c, "Circle radius C");
  sweep->add_option("--points", sweep_args.points, "Number of phi samples");
  sweep->add_option("--phi-min", sweep_args.phi_min, "Start of the phi range (radians)");
  sweep->add_option("--phi-max", sweep_args.phi_max, "End of the phi range (radians)");
  sweep->add_option("--tol-conv", sweep_args.tol_conv, "Eigensolver backward-error bound");
  sweep->add_option("--tol-cluster", sweep_args.tol_cluster,
                    "Degeneracy clustering tolerance (0 = automatic)");
  sweep->add_option("--format", sweep_args.format, "csv|json|gnuplot");
  sweep->add_option("--out", sweep_args.out, "Output file (default stdout)");

  CharpolyArgs charpoly_args;
  auto* charpoly =
      app.add_subcommand("charpoly", "Exact characteristic polynomial (rational couplings)");
  charpoly->add_option("--spins", charpoly_args.spins, "Number of spins N (exact path: N <= 6)");
  charpoly->add_option("--topology", charpoly_args.topology, "open|closed");
  charpoly->add_option("--site", charpoly_args.site, "Photon-coupled site k (1-based)");
  charpoly->add_option("--g", charpoly_args.g, "Coupling G as p/q, integer, or decimal");
  charpoly->add_option("--j", charpoly_args.j, "Coupling J as p/q, integer, or decimal");
  charpoly->add_option("--out", charpoly_args.out, "Output file (default stdout)");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Certification and invariant suites");
  verify->add_option("--scope", verify_args.scope,
                     "eq5 (analytic levels, open chain, edge photon) | eq7 (factored charpoly,"
                     " photon on second site) | eq8 (factored charpoly, closed chain) |"
                     " invariants | all");
  verify->add_option("--seed", verify_args.seed, "Seed for the randomized suites");
  verify->add_option("--out", verify_args.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArguments;
  }

  try {
    if (spectrum->parsed()) return run_spectrum(spectrum_args);
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (charpoly->parsed()) return run_charpoly(charpoly_args);
    if (verify->parsed()) return run_verify(verify_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitBadArguments;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadArguments;
  }
  return kExitBadArguments;
}
