#include "xxz/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "xxz/config.hpp"
#include "xxz/csv.hpp"
#include "xxz/errors.hpp"
#include "xxz/experiments.hpp"
#include "xxz/parallel.hpp"

namespace xxz {

namespace {

struct Options {
  std::string config_path;
  std::string out_path;
  unsigned threads = 0;
};

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

// Writes to --out, else the config's output_path, else `fallback`.
template <typename Write>
void emit(const Options& opt, const RunConfig& config, std::ostream& fallback, Write&& write) {
  const std::string& path = !opt.out_path.empty() ? opt.out_path : config.output_path;
  if (path.empty()) {
    write(fallback);
    fallback.flush();
  } else {
    write_file(path, write);
  }
}

// The initial register and, when it holds one defect excitation, its partner on the other defect.
std::vector<BasisState> default_tracked(const ChainSpec& chain, BasisState initial) {
  std::vector<BasisState> out{initial};
  const std::uint32_t a = 1u << (chain.defects.first - 1);
  const std::uint32_t b = 1u << (chain.defects.second - 1);
  if (std::popcount(initial.bits & (a | b)) == 1) out.push_back(BasisState{initial.bits ^ a ^ b});
  return out;
}

int run(Mode mode, const Options& opt, std::ostream& out, std::ostream& err) {
  RunConfig config = load_config(opt.config_path);
  config.require_for(mode);
  const ChainSpec& chain = config.chain;

  switch (mode) {
    case Mode::sweep: {
      const auto rows = sweep_cmax(chain, config.delta_grid.values, config.excitations, opt.threads);
      emit(opt, config, out, [&](std::ostream& os) { write_sweep_csv(os, rows); });
      err << "sweep: " << rows.size() << " rows\n";
      return 0;
    }
    case Mode::evolve: {
      const auto tracked = config.tracked_registers.empty() ? default_tracked(chain, *config.initial_register)
                                                            : config.tracked_registers;
      const auto rows =
          evolve_registers(chain, *config.initial_register, config.t_grid.values, tracked, opt.threads);
      emit(opt, config, out, [&](std::ostream& os) { write_dynamics_csv(os, rows); });
      const auto instants = find_bell_instants(rows);
      err << "evolve: " << rows.size() << " rows; Bell instants:";
      for (double t : instants.times) err << ' ' << t;
      if (instants.plateau) err << " (plateau)";
      err << '\n';
      return 0;
    }
    case Mode::compare: {
      const auto rows = compare_numeric_analytic(chain, config.delta_grid.values, opt.threads);
      emit(opt, config, out, [&](std::ostream& os) { write_comparison_csv(os, rows); });
      return 0;
    }
    case Mode::spectrum: {
      std::vector<SpectrumRow> rows;
      for (int n : config.excitations) {
        const auto basis = enumerate_sector(chain.length, n);
        const auto decomp = eigh(build_sector_hamiltonian(chain, basis).matrix);
        const auto conc = eigenstate_concurrences(decomp, PairTracer(basis, chain.defects));
        for (std::size_t k = 0; k < decomp.size(); ++k)
          rows.push_back({chain.length, n, k, decomp.values(static_cast<Eigen::Index>(k)), conc[k],
                          static_cast<bool>(decomp.degenerate[k])});
      }
      emit(opt, config, out, [&](std::ostream& os) { write_spectrum_csv(os, rows); });
      return 0;
    }
    case Mode::oracle: {
      const auto report = oracle_full_vs_sector(chain);
      const double tolerance = 1e-9 * std::max(1.0, report.norm);
      out << "max discrepancy: " << format_real(report.discrepancy) << " (norm " << format_real(report.norm)
          << ", tolerance " << format_real(tolerance) << ", dimension " << report.dimension_sum << ")\n";
      if (report.discrepancy > tolerance) {
        err << "oracle: full and sector spectra disagree\n";
        return 2;
      }
      return 0;
    }
  }
  return 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement of two defect qubits in a periodic XXZ chain"};
  app.require_subcommand(1);
  Options opt;
  std::optional<Mode> chosen;

  for (Mode mode : {Mode::sweep, Mode::evolve, Mode::compare, Mode::spectrum, Mode::oracle}) {
    static constexpr const char* descriptions[] = {
        "maximum defect concurrence over a Delta grid",
        "register probabilities and defect concurrence in time",
        "numeric vs analytic two-excitation d-band",
        "sector spectra with per-eigenstate defect concurrence",
        "full 2^L spectrum vs union of sector spectra"};
    auto* sub = app.add_subcommand(std::string(mode_name(mode)), descriptions[static_cast<int>(mode)]);
    sub->add_option("--config", opt.config_path, "run configuration file")->required();
    sub->add_option("--out", opt.out_path, "output file (default: config output_path, else stdout)");
    sub->add_option("--threads", opt.threads, "worker threads (default: hardware concurrency)")
        ->check(CLI::NonNegativeNumber);
    sub->callback([&chosen, mode] { chosen = mode; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }
  if (opt.threads == 0) opt.threads = default_threads();

  try {
    return run(*chosen, opt, out, err);
  } catch (const ParseError& e) {
    err << "config error: " << e.what() << '\n';
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
  } catch (const NotFound& e) {
    err << "invalid register: " << e.what() << '\n';
  } catch (const DegradedResult& e) {
    err << "degraded result: " << e.what() << " [" << e.diagnostics() << "]\n";
    return 2;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return 2;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace xxz
