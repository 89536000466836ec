#include "xxz/experiments.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "xxz/bethe.hpp"
#include "xxz/errors.hpp"
#include "xxz/parallel.hpp"
#include "xxz/spectral.hpp"

namespace xxz {

std::vector<SweepRow> sweep_cmax(const ChainSpec& base, std::span<const double> deltas,
                                 std::span<const int> excitations, unsigned threads) {
  base.validate();
  if (deltas.empty() || excitations.empty()) throw InvalidArgument("sweep grid must be nonempty");

  // Bases and tracers are immutable and shared by every Delta.
  std::vector<SectorBasisPtr> bases;
  std::vector<PairTracer> tracers;
  for (int n : excitations) {
    bases.push_back(enumerate_sector(base.length, n));
    tracers.emplace_back(bases.back(), base.defects);
  }

  std::vector<SweepRow> rows(deltas.size() * excitations.size());
  parallel_for(rows.size(), threads, [&](std::size_t item) {
    const std::size_t di = item / excitations.size();
    const std::size_t ni = item % excitations.size();
    ChainSpec spec = base;
    spec.Delta = deltas[di];
    const auto decomp = eigh(build_sector_hamiltonian(spec, bases[ni]).matrix);
    const auto best = max_concurrence(decomp, tracers[ni]);
    rows[item] = SweepRow{spec.Delta, spec.length, excitations[ni], spec.defects.first, spec.defects.second,
                          best.c_max, best.energy, best.index, best.degenerate};
  });
  return rows;
}

std::vector<DynamicsRow> evolve_registers(const ChainSpec& spec, BasisState initial, std::span<const double> times,
                                          std::span<const BasisState> tracked, unsigned threads) {
  spec.validate();
  const auto basis = enumerate_sector(spec.length, initial.excitations());
  const auto start = SectorState::from_register(basis, initial);
  std::vector<std::size_t> tracked_index;
  for (BasisState reg : tracked) tracked_index.push_back(basis->rank(reg));

  const auto decomp = eigh(build_sector_hamiltonian(spec, basis).matrix);
  const SpectralPropagator propagator(decomp, start);
  const PairTracer tracer(basis, spec.defects);

  std::vector<DynamicsRow> rows(times.size() * tracked.size());
  parallel_for(times.size(), threads, [&](std::size_t ti) {
    const SectorState psi = propagator.at(times[ti]);
    const double c = concurrence(tracer.trace(psi.amplitudes()));
    for (std::size_t j = 0; j < tracked.size(); ++j) {
      const double p = std::norm(psi.amplitudes()(static_cast<Eigen::Index>(tracked_index[j])));
      rows[ti * tracked.size() + j] = DynamicsRow{times[ti], tracked[j], std::min(p, 1.0), c};
    }
  });
  return rows;
}

BellInstants find_bell_instants(std::span<const DynamicsRow> rows, double threshold) {
  std::vector<double> t, c;
  for (const auto& row : rows) {
    if (!t.empty() && row.t == t.back()) continue;
    t.push_back(row.t);
    c.push_back(row.concurrence);
  }
  BellInstants out;
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    if (c[i] < threshold) continue;
    if (c[i] > c[i - 1] && c[i] > c[i + 1]) out.times.push_back(t[i]);
    if (c[i] == c[i - 1] && c[i] == c[i + 1]) out.plateau = true;
  }
  return out;
}

std::vector<std::size_t> dband_indices(const EigenDecomposition& decomp, const SectorBasis& basis,
                                       SitePair defects) {
  const std::uint32_t mask = (1u << (defects.first - 1)) | (1u << (defects.second - 1));
  const auto states = basis.states();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < decomp.size(); ++k) {
    double p = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i)
      if (std::popcount(states[i].bits & mask) == 1)
        p += std::pow(decomp.vectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)), 2);
    if (p > 0.5) out.push_back(k);
  }
  return out;
}

std::vector<ComparisonRow> compare_numeric_analytic(const ChainSpec& base, std::span<const double> deltas,
                                                    unsigned threads) {
  base.validate();
  if (deltas.empty()) throw InvalidArgument("comparison grid must be nonempty");
  DBandModel geometry;
  geometry.length = base.length;
  geometry.n0 = base.defects.first;
  if (base.length < 6) throw InvalidArgument("comparison needs L >= 6");
  if (base.defects.second != geometry.wrap(base.defects.first + 1))
    throw InvalidArgument("comparison needs nearest-neighbour defects (n0, n0+1)");
  for (double delta : deltas)
    if (!(delta >= 0.0 && base.J * delta < base.d))
      throw InvalidArgument("comparison requires 0 <= Delta < d/J for every grid point");

  const auto basis = enumerate_sector(base.length, 2);
  const PairTracer tracer(basis, base.defects);
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  std::vector<ComparisonRow> rows(deltas.size());
  parallel_for(deltas.size(), threads, [&](std::size_t item) {
    ChainSpec spec = base;
    spec.Delta = deltas[item];
    const DBandModel model{spec.length, spec.defects.first, spec.Delta, spec.J, spec.d, spec.epsilon};

    const auto decomp = eigh(build_sector_hamiltonian(spec, basis).matrix);
    const auto numeric = max_concurrence(decomp, tracer);
    const auto band = dband_indices(decomp, *basis, spec.defects);

    ComparisonRow row;
    row.Delta = spec.Delta;
    row.length = spec.length;
    row.numeric_c_max = numeric.c_max;

    std::vector<double> analytic_levels;
    Eigen::VectorXcd analytic_ground;
    if (spec.Delta == 0.0) {
      const auto states = dband_states_delta0(model);
      auto lowest = std::min_element(states.begin(), states.end(),
                                     [](const auto& a, const auto& b) { return a.energy < b.energy; });
      for (const auto& s : states) analytic_levels.push_back(s.energy);
      analytic_ground = lowest->state.amplitudes();
      row.analytic_c_max = cmax_from_overlap(0.5);
      row.analytic_ground_energy = lowest->energy;
      row.beta_roots = static_cast<std::size_t>(spec.length - 2);
    } else {
      const auto gs = dband_ground_state(model);
      for (double alpha : {std::numbers::pi / 3.0, 2.0 * std::numbers::pi / 3.0})
        for (const auto& root : gs.roots.roots)
          analytic_levels.push_back(model.eps2() + model.d + model.J * (std::cos(alpha) + std::cos(root.beta)));
      analytic_ground = gs.state.amplitudes();
      row.analytic_c_max = gs.c_max;
      row.analytic_ground_energy = gs.energy;
      row.beta_roots = gs.roots.roots.size();
    }
    std::sort(analytic_levels.begin(), analytic_levels.end());

    std::vector<double> numeric_levels;
    for (std::size_t k : band) numeric_levels.push_back(decomp.values(static_cast<Eigen::Index>(k)));
    if (band.empty()) {
      row.numeric_ground_energy = nan;
      row.ground_overlap = nan;
    } else {
      const auto k0 = static_cast<Eigen::Index>(band.front());
      row.numeric_ground_energy = decomp.values(k0);
      row.ground_overlap = std::norm(analytic_ground.dot(decomp.vectors.col(k0).cast<std::complex<double>>()));
    }
    if (numeric_levels.size() == analytic_levels.size()) {
      double worst = 0.0;
      for (std::size_t i = 0; i < numeric_levels.size(); ++i)
        worst = std::max(worst, std::abs(numeric_levels[i] - analytic_levels[i]));
      row.dband_energy_mismatch = worst;
    } else {
      row.dband_energy_mismatch = nan;
    }
    rows[item] = row;
  });
  return rows;
}

OracleReport oracle_full_vs_sector(const ChainSpec& spec) {
  spec.validate();
  if (spec.length > kMaxOracleLength)
    throw ResourceError("spectral oracle limited to L <= " + std::to_string(kMaxOracleLength));
  const Eigen::MatrixXd full = full_hamiltonian(spec);
  Eigen::VectorXd full_values = eigvalsh(full);

  std::vector<double> sector_values;
  OracleReport report;
  for (int n = 0; n <= spec.length; ++n) {
    const auto basis = enumerate_sector(spec.length, n);
    report.dimension_sum += basis->size();
    const Eigen::VectorXd v = eigvalsh(build_sector_hamiltonian(spec, basis).matrix);
    sector_values.insert(sector_values.end(), v.data(), v.data() + v.size());
  }
  std::sort(sector_values.begin(), sector_values.end());
  std::sort(full_values.data(), full_values.data() + full_values.size());

  report.norm = full.cwiseAbs().maxCoeff();
  if (sector_values.size() != static_cast<std::size_t>(full_values.size()))
    throw NumericError("sector dimensions do not add up to 2^L");
  for (std::size_t i = 0; i < sector_values.size(); ++i)
    report.discrepancy =
        std::max(report.discrepancy, std::abs(sector_values[i] - full_values(static_cast<Eigen::Index>(i))));
  return report;
}

}  // namespace xxz
