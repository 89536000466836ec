#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "xxz/basis.hpp"

namespace xxz {

/// Ascending eigenvalues with orthonormal eigenvectors stored column-wise.
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  /// degenerate[k] is set when values[k] lies within the degeneracy tolerance of a neighbour.
  std::vector<bool> degenerate;

  std::size_t size() const { return static_cast<std::size_t>(values.size()); }
};

/// Relative spacing below which two eigenvalues are treated as one degenerate level.
inline constexpr double kDegeneracyTolerance = 1e-8;

bool nearly_degenerate(double a, double b);

/// Dense symmetric eigendecomposition. Throws InvalidArgument for non-symmetric
/// input and NumericError if the solver fails to converge.
EigenDecomposition eigh(const Eigen::MatrixXd& matrix);
/// Eigenvalues only, ascending; same preconditions as eigh.
Eigen::VectorXd eigvalsh(const Eigen::MatrixXd& matrix);

/// Normalized complex amplitudes over a sector basis.
class SectorState {
public:
  SectorState(SectorBasisPtr basis, Eigen::VectorXcd amplitudes);

  /// Unit amplitude on a single register.
  static SectorState from_register(SectorBasisPtr basis, BasisState reg);
  /// Real vector, e.g. an eigenvector column; normalized on construction.
  static SectorState from_real(SectorBasisPtr basis, const Eigen::VectorXd& amplitudes);

  const SectorBasis& basis() const { return *basis_; }
  const SectorBasisPtr& basis_ptr() const { return basis_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(BasisState reg) const;

private:
  SectorBasisPtr basis_;
  Eigen::VectorXcd amplitudes_;
};

/// Propagates states under a fixed decomposition: psi(t) = sum_k exp(-i E_k t) <v_k|psi0> v_k.
/// Caches the eigenbasis overlaps so that repeated evaluation costs one dense product per time.
class SpectralPropagator {
public:
  SpectralPropagator(const EigenDecomposition& decomp, const SectorState& initial);

  SectorState at(double t) const;
  /// Amplitude of a single register at time t, O(dim).
  std::complex<double> amplitude(double t, std::size_t register_index) const;

private:
  const EigenDecomposition* decomp_;
  SectorBasisPtr basis_;
  Eigen::VectorXcd overlaps_;
};

/// Time in units of 1/J with hbar = 1.
SectorState evolve_state(const EigenDecomposition& decomp, const SectorState& initial, double t);

/// |<register|state>|^2. Throws NotFound if the register is outside the state's sector.
double register_probability(const SectorState& state, BasisState reg);

/// <psi|H|psi> for a real symmetric H.
double expectation(const Eigen::MatrixXd& h, const SectorState& state);

}  // namespace xxz
