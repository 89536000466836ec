#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <utility>
#include <vector>

#include "xxz/basis.hpp"

namespace xxz {

/// Physical parameters of a periodic XXZ ring with two defect qubits.
/// Energies are in units of the hopping integral when J = 1.
struct ChainSpec {
  int length = 8;
  double J = 1.0;
  double Delta = 0.0;
  double epsilon = 0.0;
  double d = 10.0;
  std::pair<int, int> defects{1, 2};

  /// Throws InvalidArgument when a chain invariant is violated.
  void validate() const;
  bool is_defect(int site) const { return site == defects.first || site == defects.second; }
};

/// Dense sector block of the Hamiltonian, energies counted from the all-down state.
struct SectorHamiltonian {
  SectorBasisPtr basis;
  Eigen::MatrixXd matrix;
};

inline constexpr std::size_t kDefaultDimensionCap = 4096;
inline constexpr int kMaxFullLength = 12;

/// Level spacing per site (index n-1 for site n).
std::vector<double> site_fields(const ChainSpec& spec);

/// Diagonal (Zeeman + Ising) energy of a register relative to the all-down ground state.
double diagonal_energy(const ChainSpec& spec, BasisState state);

/// Assembles the N-excitation block: diagonal from diagonal_energy and J/2 between
/// registers that differ by one excitation hopping across a single periodic bond.
SectorHamiltonian build_sector_hamiltonian(const ChainSpec& spec, SectorBasisPtr basis,
                                           std::size_t dimension_cap = kDefaultDimensionCap);

/// The full 2^L matrix in natural bitmask order. L <= 12.
Eigen::MatrixXd full_hamiltonian(const ChainSpec& spec);

}  // namespace xxz
