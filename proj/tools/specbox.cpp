// specbox: spectra of even polynomial Schrodinger operators in trigonometric
// bases at arbitrary decimal precision.

#include <CLI11.hpp>
#include <json.hpp>

#include <specbox/eigensolve.hpp>
#include <specbox/optimizer.hpp>
#include <specbox/oracle.hpp>
#include <specbox/wavefn.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace specbox;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonFlags {
  int digits = 40;
  std::string k, lambda, coeffs;
  std::string bc = "periodic";
  std::string parity = "both";
  int n_basis = 0;
  std::string half_width;
  bool optimize = false;
  int levels = 6;
  std::string format = "table";
  std::string output;
  int out_digits = 17;
};

int default_digits() {
  if (const char* env = std::getenv("SPECBOX_DIGITS")) {
    return std::atoi(env);
  }
  return 40;
}

// Numeric flags stay strings until the precision context exists, so nothing
// is truncated through double on the way in.
Potential build_potential(const CommonFlags& f) {
  if (!f.coeffs.empty()) {
    if (!f.k.empty() || !f.lambda.empty()) {
      throw CLI::ValidationError("--coeffs excludes --k/--lambda");
    }
    std::map<int, Real> coeffs;
    std::stringstream ss(f.coeffs);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) {
        throw CLI::ValidationError("--coeffs entries must look like 4:0.01");
      }
      coeffs[std::stoi(item.substr(0, colon))] = Real(item.substr(colon + 1));
    }
    return Potential(std::move(coeffs));
  }
  if (f.k.empty() || f.lambda.empty()) {
    throw CLI::ValidationError("need either --coeffs or both --k and --lambda");
  }
  return Potential::quartic(Real(f.k), Real(f.lambda));
}

BoundaryFamily parse_bc(const std::string& s) {
  if (s == "periodic") return BoundaryFamily::Periodic;
  if (s == "dirichlet") return BoundaryFamily::Dirichlet;
  throw CLI::ValidationError("--bc must be periodic or dirichlet");
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw CLI::ValidationError("cannot open output file " + path);
  return file;
}

struct MergedLevel {
  Real energy;
  Parity parity;
  int index_in_block;
};

// Solves the requested parity block(s) separately and merges the spectra.
std::vector<MergedLevel> solve_levels(const Potential& p, BoundaryFamily bc,
                                      const std::string& parity, int n_basis,
                                      const Real& L, int levels,
                                      const PrecisionCtx& ctx) {
  std::vector<MergedLevel> merged;
  auto add_block = [&](Parity par) {
    BasisSpec spec{bc, par, n_basis, L};
    auto res = eig_sym(hamiltonian_matrix(p, spec, ctx), ctx);
    for (size_t i = 0; i < res.eigenvalues.size(); ++i) {
      merged.push_back({res.eigenvalues[i], par, static_cast<int>(i)});
    }
  };
  if (parity == "even" || parity == "both") add_block(Parity::Even);
  if (parity == "odd" || parity == "both") add_block(Parity::Odd);
  if (merged.empty()) throw CLI::ValidationError("--parity must be even, odd or both");
  std::sort(merged.begin(), merged.end(),
            [](const MergedLevel& a, const MergedLevel& b) {
              return a.energy < b.energy;
            });
  if (static_cast<int>(merged.size()) > levels) merged.resize(levels);
  return merged;
}

Real pick_half_width(const CommonFlags& f, const Potential& p,
                     BoundaryFamily bc, const PrecisionCtx& ctx) {
  if (f.optimize && !f.half_width.empty()) {
    throw CLI::ValidationError("exactly one of --half-width/--optimize");
  }
  if (!f.optimize && f.half_width.empty()) {
    throw CLI::ValidationError("need --half-width <L> or --optimize");
  }
  if (!f.half_width.empty()) return Real(f.half_width);
  Parity par = f.parity == "odd" ? Parity::Odd : Parity::Even;
  return find_optimal_L(p, bc, par, f.n_basis, ctx).L_hat;
}

void cmd_spectrum(const CommonFlags& f, const std::string& dump_path) {
  auto ctx = make_context(f.digits);
  Potential p = build_potential(f);
  BoundaryFamily bc = parse_bc(f.bc);
  if (f.n_basis <= 0) throw CLI::ValidationError("--n-basis is required");
  Real L = pick_half_width(f, p, bc, ctx);

  if (!dump_path.empty()) {
    Parity par = f.parity == "odd" ? Parity::Odd : Parity::Even;
    BasisSpec spec{bc, par, f.n_basis, L};
    std::ofstream out(dump_path, std::ios::binary);
    dump_matrix(hamiltonian_matrix(p, spec, ctx), out, f.digits);
  }

  auto levels = solve_levels(p, bc, f.parity, f.n_basis, L, f.levels, ctx);
  // SD estimated against a reference run with ten more basis functions
  auto ref = solve_levels(p, bc, f.parity, f.n_basis + 10, L,
                          f.levels, ctx);
  std::vector<int> sd(levels.size());
  for (size_t i = 0; i < levels.size(); ++i) {
    sd[i] = estimate_significant_digits(levels[i].energy, ref[i].energy,
                                        f.digits);
  }

  std::ofstream file;
  std::ostream& out = open_output(f.output, file);
  if (f.format == "json") {
    json j;
    j["half_width"] = L.str(f.digits);
    j["digits"] = f.digits;
    j["eigenvalues"] = json::array();
    for (size_t i = 0; i < levels.size(); ++i) {
      j["eigenvalues"].push_back({{"n", i},
                                  {"energy", levels[i].energy.str(f.digits)},
                                  {"sd", sd[i]}});
    }
    out << j.dump(2) << "\n";
  } else if (f.format == "csv") {
    out << "n,energy,sd\n";
    for (size_t i = 0; i < levels.size(); ++i) {
      out << i << "," << levels[i].energy.str(std::max(f.digits, f.out_digits))
          << "," << sd[i] << "\n";
    }
  } else {
    out << "L = " << L.str(f.digits) << "\n";
    for (size_t i = 0; i < levels.size(); ++i) {
      out << i << "  " << levels[i].energy.str(f.digits) << "  SD=" << sd[i]
          << "\n";
    }
  }
}

void cmd_scan(const CommonFlags& f, const std::string& l_min,
              const std::string& l_max, int points, int level) {
  auto ctx = make_context(f.digits);
  Potential p = build_potential(f);
  BoundaryFamily bc = parse_bc(f.bc);
  Parity par = f.parity == "odd" ? Parity::Odd : Parity::Even;
  if (f.n_basis <= 0) throw CLI::ValidationError("--n-basis is required");
  Real lo, hi;
  if (!l_min.empty() && !l_max.empty()) {
    lo = Real(l_min);
    hi = Real(l_max);
  } else {
    Real floor = classical_scan_floor(p, bc, par, f.n_basis, level, ctx);
    lo = floor * 105 / 100;
    hi = 4 * floor;
  }
  auto scan = scan_energy(p, bc, par, f.n_basis, level, lo, hi, points, ctx);
  std::ofstream file;
  std::ostream& out = open_output(f.output, file);
  out << "L,E,dE_dL,d2E_dL2\n";
  int n = static_cast<int>(scan.L_grid.size());
  for (int i = 0; i < n; ++i) {
    out << scan.L_grid[i].str(f.out_digits) << ","
        << scan.energies[i].str(f.out_digits) << ",";
    if (i >= 1 && i + 1 < n) {
      out << scan.d1[i - 1].str(f.out_digits) << ","
          << scan.d2[i - 1].str(f.out_digits);
    } else {
      out << ",";
    }
    out << "\n";
  }
}

void cmd_optimize_l(const CommonFlags& f, int level, int points) {
  auto ctx = make_context(f.digits);
  Potential p = build_potential(f);
  BoundaryFamily bc = parse_bc(f.bc);
  Parity par = f.parity == "odd" ? Parity::Odd : Parity::Even;
  if (f.n_basis <= 0) throw CLI::ValidationError("--n-basis is required");
  OptimizeOptions opts;
  opts.level = level;
  opts.points = points;
  auto r = find_optimal_L(p, bc, par, f.n_basis, ctx, opts);

  std::ofstream file;
  std::ostream& out = open_output(f.output, file);
  if (f.format == "json") {
    json j;
    j["L_hat"] = r.L_hat.str(f.out_digits);
    j["energy"] = r.energy.str(f.digits);
    j["candidates"] = json::array();
    for (const auto& c : r.scan.candidates) {
      j["candidates"].push_back(
          {{"L", c.L.str(f.out_digits)},
           {"kind",
            c.kind == CandidateKind::Inflection ? "inflection" : "minimum"},
           {"abs_d1", c.abs_d1.str(6)}});
    }
    out << j.dump(2) << "\n";
  } else {
    // L_hat to five decimals, matching the resolution of the refinement
    out << "L_hat = " << r.L_hat.str(7) << "\n";
    out << "E(L_hat) = " << r.energy.str(f.digits) << "\n";
    out << "candidates:\n";
    for (const auto& c : r.scan.candidates) {
      out << "  L=" << c.L.str(7) << "  "
          << (c.kind == CandidateKind::Inflection ? "inflection" : "minimum")
          << "  |dE/dL|=" << c.abs_d1.str(4) << "\n";
    }
  }
}

void cmd_wavefunction(const CommonFlags& f, int level, int grid, bool with_ref) {
  auto ctx = make_context(f.digits);
  Potential p = build_potential(f);
  BoundaryFamily bc = parse_bc(f.bc);
  Parity par = f.parity == "odd" ? Parity::Odd : Parity::Even;
  if (f.n_basis <= 0) throw CLI::ValidationError("--n-basis is required");
  Real L = pick_half_width(f, p, bc, ctx);
  BasisSpec spec{bc, par, f.n_basis, L};
  auto res = eig_sym(hamiltonian_matrix(p, spec, ctx), ctx, true);
  if (level >= f.n_basis) throw CLI::ValidationError("--level must be < --n-basis");
  auto samples =
      sample_wavefunction(res.eigenvectors[level], spec, level, grid, ctx);

  std::ofstream file;
  std::ostream& out = open_output(f.output, file);
  if (with_ref) {
    auto ref = sho_ground_samples(samples, ctx);
    auto diff = l2_difference(samples, ref);
    out << "x,psi,psi_ref,delta_sq\n";
    for (size_t i = 0; i < samples.x_grid.size(); ++i) {
      out << samples.x_grid[i].str(f.out_digits) << ","
          << samples.values[i].str(f.out_digits) << ","
          << ref.values[i].str(f.out_digits) << ","
          << diff.delta_sq[i].str(f.out_digits) << "\n";
    }
  } else {
    out << "x,psi\n";
    for (size_t i = 0; i < samples.x_grid.size(); ++i) {
      out << samples.x_grid[i].str(f.out_digits) << ","
          << samples.values[i].str(f.out_digits) << "\n";
    }
  }
}

void cmd_compare_bc(const CommonFlags& f, int level) {
  auto ctx = make_context(f.digits);
  Potential p = build_potential(f);
  Parity par = f.parity == "odd" ? Parity::Odd : Parity::Even;
  if (f.n_basis <= 0) throw CLI::ValidationError("--n-basis is required");

  std::ofstream file;
  std::ostream& out = open_output(f.output, file);
  struct Row {
    std::string name;
    Real L_hat, energy;
    int sd;
  };
  std::vector<Row> rows;
  for (BoundaryFamily bc :
       {BoundaryFamily::Periodic, BoundaryFamily::Dirichlet}) {
    OptimizeOptions opts;
    opts.level = level;
    auto r = find_optimal_L(p, bc, par, f.n_basis, ctx, opts);
    BasisSpec ref_spec{bc, par, f.n_basis + 10, r.L_hat};
    auto ref = eig_sym(hamiltonian_matrix(p, ref_spec, ctx), ctx);
    int sd = estimate_significant_digits(r.energy, ref.eigenvalues[level],
                                         f.digits);
    rows.push_back({bc == BoundaryFamily::Periodic ? "periodic" : "dirichlet",
                    r.L_hat, r.energy, sd});
  }
  if (f.format == "json") {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"bc", r.name},
                   {"L_hat", r.L_hat.str(f.out_digits)},
                   {"energy", r.energy.str(f.digits)},
                   {"sd", r.sd}});
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      out << r.name << "  L_hat=" << r.L_hat.str(7)
          << "  E=" << r.energy.str(f.digits) << "  SD=" << r.sd << "\n";
    }
    out << "digit deficit of dirichlet vs periodic: " << rows[0].sd - rows[1].sd
        << "\n";
  }
}

void cmd_dump_matrix(const CommonFlags& f) {
  auto ctx = make_context(f.digits);
  Potential p = build_potential(f);
  BoundaryFamily bc = parse_bc(f.bc);
  Parity par = f.parity == "odd" ? Parity::Odd : Parity::Even;
  if (f.n_basis <= 0) throw CLI::ValidationError("--n-basis is required");
  if (f.half_width.empty()) throw CLI::ValidationError("need --half-width");
  BasisSpec spec{bc, par, f.n_basis, Real(f.half_width)};
  std::ofstream file;
  std::ostream& out = open_output(f.output, file);
  dump_matrix(hamiltonian_matrix(p, spec, ctx), out, f.digits);
}

void cmd_scale(const CommonFlags& f) {
  auto ctx = make_context(f.digits);
  if (f.k.empty() || f.lambda.empty()) {
    throw CLI::ValidationError("scale needs --k and --lambda");
  }
  auto map = reduce(Real(f.k), Real(f.lambda));
  std::ofstream file;
  std::ostream& out = open_output(f.output, file);
  if (f.format == "json") {
    json j{{"beta", map.beta.str(f.digits)},
           {"energy_factor", map.energy_factor.str(f.digits)},
           {"length_factor", map.length_factor.str(f.digits)}};
    out << j.dump(2) << "\n";
  } else {
    out << "beta = " << map.beta.str(f.digits) << "\n"
        << "energy_factor = " << map.energy_factor.str(f.digits) << "\n"
        << "length_factor = " << map.length_factor.str(f.digits) << "\n";
  }
}

void cmd_verify(const CommonFlags& f, const std::string& what, int j_pow,
                int n_freq, int grid_n, int count) {
  auto ctx = make_context(f.digits);
  std::ofstream file;
  std::ostream& out = open_output(f.output, file);
  if (what == "moment") {
    if (f.half_width.empty()) throw CLI::ValidationError("need --half-width");
    Real L(f.half_width);
    QuadratureConfig cfg{pow10(-f.digits + 10), pow10(-f.digits + 10), 40};
    auto q = quadrature_moment(j_pow, n_freq, L, cfg, ctx);
    Real closed = cosine_moment(j_pow, n_freq, L, ctx);
    out << "closed_form = " << closed.str(f.digits) << "\n"
        << "quadrature  = " << q.value.str(f.digits) << "\n"
        << "difference  = " << Real(closed - q.value).str(6) << "\n"
        << "quadrature_error_estimate = " << q.error_estimate.str(6) << "\n";
  } else if (what == "fd") {
    Potential p = build_potential(f);
    if (f.half_width.empty()) throw CLI::ValidationError("need --half-width");
    Real L(f.half_width);
    auto fd = fd_eigenvalues(p, L.convert_to<double>(), grid_n, count);
    auto var = solve_levels(p, BoundaryFamily::Dirichlet, "both", f.n_basis > 0 ? f.n_basis : 40,
                            L, count, ctx);
    out << "n,finite_difference,variational\n";
    for (int i = 0; i < count; ++i) {
      std::ostringstream fdv;
      fdv.precision(15);
      fdv << fd[i];
      out << i << "," << fdv.str() << "," << var[i].energy.str(20) << "\n";
    }
  } else {
    throw CLI::ValidationError("--what must be moment or fd");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational spectra of even polynomial potentials in "
               "trigonometric bases at arbitrary precision"};
  app.require_subcommand(1);

  CommonFlags f;
  f.digits = default_digits();

  auto add_common = [&](CLI::App* cmd, bool needs_problem = true) {
    cmd->add_option("--digits", f.digits, "working decimal precision");
    if (needs_problem) {
      cmd->add_option("--k", f.k, "quartic well depth coefficient");
      cmd->add_option("--lambda", f.lambda, "quartic coupling");
      cmd->add_option("--coeffs", f.coeffs,
                      "general even polynomial, e.g. 2:-1,4:0.01");
    }
    cmd->add_option("--format", f.format, "table|csv|json");
    cmd->add_option("--output,-o", f.output, "output file (default stdout)");
    cmd->add_option("--out-digits", f.out_digits, "digits in CSV output");
    return cmd;
  };
  auto add_basis = [&](CLI::App* cmd) {
    cmd->add_option("--bc", f.bc, "periodic|dirichlet");
    cmd->add_option("--parity", f.parity, "even|odd|both");
    cmd->add_option("--n-basis", f.n_basis, "basis functions per parity block");
    return cmd;
  };

  std::string dump_path, l_min, l_max, what = "moment";
  int level = 0, points = 60, grid = 2001, grid_n = 2001, count = 3;
  int j_pow = 2, n_freq = 1;
  bool with_ref = false;

  auto* spectrum = add_basis(add_common(app.add_subcommand(
      "spectrum", "lowest eigenvalues at fixed or optimized half-width")));
  spectrum->add_option("--half-width", f.half_width, "domain half-width L");
  spectrum->add_flag("--optimize", f.optimize, "choose L by the domain protocol");
  spectrum->add_option("--levels", f.levels, "number of levels to print");
  spectrum->add_option("--dump-matrix", dump_path, "write assembled matrix");

  auto* scan = add_basis(add_common(
      app.add_subcommand("scan", "sample E(L) for plotting")));
  scan->add_option("--l-min", l_min, "scan lower bound");
  scan->add_option("--l-max", l_max, "scan upper bound");
  scan->add_option("--points", points, "grid points");
  scan->add_option("--level", level, "energy level to track");

  auto* opt = add_basis(add_common(
      app.add_subcommand("optimize-l", "locate the optimal half-width")));
  opt->add_option("--level", level, "energy level to optimize on");
  opt->add_option("--points", points, "scan grid points");

  auto* wf = add_basis(add_common(app.add_subcommand(
      "wavefunction", "sample an eigenfunction on a grid")));
  wf->add_option("--half-width", f.half_width, "domain half-width L");
  wf->add_flag("--optimize", f.optimize, "choose L by the domain protocol");
  wf->add_option("--level", level, "eigenstate index within the parity block");
  wf->add_option("--grid", grid, "sample points");
  wf->add_flag("--sho-reference", with_ref,
               "add exact harmonic ground-state columns");

  auto* cmp = add_basis(add_common(app.add_subcommand(
      "compare-bc", "periodic vs Dirichlet at their own optimal L")));
  cmp->add_option("--level", level, "energy level");

  add_common(app.add_subcommand("scale", "reduced-coupling scaling map"));

  auto* dump = add_basis(add_common(app.add_subcommand(
      "dump-matrix", "write the assembled Hamiltonian matrix")));
  dump->add_option("--half-width", f.half_width, "domain half-width L");

  auto* verify = add_basis(add_common(
      app.add_subcommand("verify", "independent oracle cross-checks")));
  verify->add_option("--what", what, "moment|fd");
  verify->add_option("--j", j_pow, "moment power (even)");
  verify->add_option("--n", n_freq, "moment frequency index");
  verify->add_option("--half-width", f.half_width, "domain half-width L");
  verify->add_option("--grid-n", grid_n, "finite-difference grid points (odd)");
  verify->add_option("--count", count, "levels to cross-check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (spectrum->parsed()) {
      cmd_spectrum(f, dump_path);
    } else if (scan->parsed()) {
      cmd_scan(f, l_min, l_max, points, level);
    } else if (opt->parsed()) {
      cmd_optimize_l(f, level, points);
    } else if (wf->parsed()) {
      cmd_wavefunction(f, level, grid, with_ref);
    } else if (cmp->parsed()) {
      cmd_compare_bc(f, level);
    } else if (app.get_subcommand("scale")->parsed()) {
      cmd_scale(f);
    } else if (dump->parsed()) {
      cmd_dump_matrix(f);
    } else if (verify->parsed()) {
      cmd_verify(f, what, j_pow, n_freq, grid_n, count);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const NonConvergenceError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return 0;
}
