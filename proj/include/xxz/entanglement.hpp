#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "xxz/hamiltonian.hpp"
#include "xxz/spectral.hpp"

namespace xxz {

/// Reduced state of two qubits in the basis |11>, |10>, |01>, |00>;
/// the first slot is the first site of the pair.
struct TwoQubitDensity {
  Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Zero();
};

using SitePair = std::pair<int, int>;

/// Lookup table pairing every sector register with its partners that differ only
/// on the two chosen sites. Built once per (basis, pair) and shared across states.
class PairTracer {
public:
  PairTracer(SectorBasisPtr basis, SitePair pair);

  TwoQubitDensity trace(const Eigen::VectorXcd& amplitudes) const;
  TwoQubitDensity trace(const Eigen::VectorXd& amplitudes) const;

  const SectorBasis& basis() const { return *basis_; }

private:
  template <typename Vector>
  TwoQubitDensity trace_impl(const Vector& amplitudes) const;

  SectorBasisPtr basis_;
  // slot_[i] is the |ab> slot of register i; partner_[i][c] the register with the
  // pair set to slot c and the same environment, or npos if it leaves the sector.
  std::vector<int> slot_;
  std::vector<std::array<std::size_t, 4>> partner_;
};

/// rho[ab,cd] = sum_e <a,b,e|psi> <c,d,e|psi>^*. Throws InvalidArgument for invalid sites.
TwoQubitDensity reduced_density(const SectorState& state, SitePair pair);

/// (sigma_y x sigma_y) rho^* (sigma_y x sigma_y).
TwoQubitDensity spin_flip(const TwoQubitDensity& rho);

/// Wootters concurrence in [0, 1]. Throws NumericError when rho is not positive semidefinite.
double concurrence(const TwoQubitDensity& rho);

/// Square roots of the eigenvalues of rho * spin_flip(rho), descending.
std::array<double, 4> wootters_lambdas(const TwoQubitDensity& rho);

/// h((1 + sqrt(1 - C^2)) / 2) with h the binary entropy in bits.
double entanglement_of_formation(double c);

struct MaxConcurrence {
  double c_max = 0.0;
  std::size_t index = 0;
  double energy = 0.0;
  bool degenerate = false;
};

/// Concurrence of every eigenvector, in eigenvalue order.
std::vector<double> eigenstate_concurrences(const EigenDecomposition& decomp, const PairTracer& tracer);

/// Largest defect-pair concurrence over the eigenvectors of one sector; exact ties go to lower energy.
MaxConcurrence max_concurrence(const EigenDecomposition& decomp, const PairTracer& tracer);
MaxConcurrence max_concurrence_over_eigenstates(const ChainSpec& spec, int excitations, SitePair pair);

}  // namespace xxz
