#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "xxz/basis.hpp"
#include "xxz/entanglement.hpp"
#include "xxz/hamiltonian.hpp"

namespace xxz {

struct SweepRow {
  double Delta = 0.0;
  int length = 0;
  int excitations = 0;
  int defect_a = 0;
  int defect_b = 0;
  double c_max = 0.0;
  double energy = 0.0;
  std::size_t eig_index = 0;
  bool degenerate = false;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct DynamicsRow {
  double t = 0.0;
  BasisState reg;
  double probability = 0.0;
  double concurrence = 0.0;

  friend bool operator==(const DynamicsRow&, const DynamicsRow&) = default;
};

/// Maximum defect-pair concurrence for every (Delta, N), Delta-major. `threads` = 0 uses
/// all hardware threads; row order does not depend on it.
std::vector<SweepRow> sweep_cmax(const ChainSpec& base, std::span<const double> deltas,
                                 std::span<const int> excitations, unsigned threads = 0);

/// Evolves a register and records, t-major, the probability of each tracked register
/// together with the defect-pair concurrence at that time.
std::vector<DynamicsRow> evolve_registers(const ChainSpec& spec, BasisState initial, std::span<const double> times,
                                          std::span<const BasisState> tracked, unsigned threads = 0);

struct BellInstants {
  std::vector<double> times;
  bool plateau = false;  // three or more equal samples at or above threshold
};

/// Strict local maxima (over three consecutive samples) of the concurrence column at or above threshold.
BellInstants find_bell_instants(std::span<const DynamicsRow> rows, double threshold = 0.9);

struct ComparisonRow {
  double Delta = 0.0;
  int length = 0;
  double numeric_c_max = 0.0;
  double analytic_c_max = 0.0;
  std::size_t beta_roots = 0;
  double numeric_ground_energy = 0.0;   // lowest numeric d-band level
  double analytic_ground_energy = 0.0;
  double dband_energy_mismatch = 0.0;   // sorted-pair max; NaN when the level counts differ
  double ground_overlap = 0.0;          // |<analytic|numeric>|^2 for the lowest d-band state
};

/// Eigenvector indices whose probability of exactly one excitation on the defect pair exceeds 1/2.
std::vector<std::size_t> dband_indices(const EigenDecomposition& decomp, const SectorBasis& basis, SitePair defects);

/// Two-excitation numerics against the decoupled-chain analytics for nearest-neighbour defects.
std::vector<ComparisonRow> compare_numeric_analytic(const ChainSpec& base, std::span<const double> deltas,
                                                    unsigned threads = 0);

struct OracleReport {
  double discrepancy = 0.0;   // max |lambda_full - lambda_sectors| after sorting
  double norm = 0.0;          // max |H_ij| of the full matrix
  std::size_t dimension_sum = 0;
};

inline constexpr int kMaxOracleLength = 10;

/// Full 2^L spectrum against the union of all sector spectra. L <= 10.
OracleReport oracle_full_vs_sector(const ChainSpec& spec);

}  // namespace xxz
