#include "xxz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "xxz/errors.hpp"

namespace xxz {

bool nearly_degenerate(double a, double b) {
  return std::abs(a - b) < kDegeneracyTolerance * std::max(1.0, std::abs(a));
}

namespace {

void require_symmetric(const Eigen::MatrixXd& matrix) {
  if (matrix.rows() != matrix.cols())
    throw InvalidArgument("eigh requires a square matrix, got " + std::to_string(matrix.rows()) + "x" +
                          std::to_string(matrix.cols()));
  if (matrix.size() == 0) return;
  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "eigh requires a symmetric matrix; max |H - H^T| = " << asym;
    throw InvalidArgument(msg.str());
  }
}

using Solver = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>;

Solver solve(const Eigen::MatrixXd& matrix, int options) {
  Solver solver(matrix, options);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "symmetric eigensolver did not converge for dimension " << matrix.rows()
        << " (implicit QL exceeded " << Solver::m_maxIterations << " iterations per eigenvalue)";
    throw NumericError(msg.str());
  }
  return solver;
}

}  // namespace

Eigen::VectorXd eigvalsh(const Eigen::MatrixXd& matrix) {
  require_symmetric(matrix);
  if (matrix.rows() == 0) return {};
  return solve(matrix, Eigen::EigenvaluesOnly).eigenvalues();
}

EigenDecomposition eigh(const Eigen::MatrixXd& matrix) {
  require_symmetric(matrix);
  EigenDecomposition out;
  if (matrix.rows() == 0) return out;

  const Solver solver = solve(matrix, Eigen::ComputeEigenvectors);
  out.values = solver.eigenvalues();
  out.vectors = solver.eigenvectors();

  const auto n = static_cast<std::size_t>(out.values.size());
  out.degenerate.assign(n, false);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    if (nearly_degenerate(out.values(i), out.values(i + 1))) out.degenerate[k] = out.degenerate[k + 1] = true;
  }
  return out;
}

SectorState::SectorState(SectorBasisPtr basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (!basis_) throw InvalidArgument("sector state needs a basis");
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_->size())
    throw InvalidArgument("amplitude vector of size " + std::to_string(amplitudes_.size()) +
                          " does not match sector dimension " + std::to_string(basis_->size()));
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "sector state must be unit-normalized, norm = " << norm;
    throw InvalidArgument(msg.str());
  }
}

SectorState SectorState::from_register(SectorBasisPtr basis, BasisState reg) {
  const std::size_t index = basis->rank(reg);
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis->size()));
  amps(static_cast<Eigen::Index>(index)) = 1.0;
  return SectorState(std::move(basis), std::move(amps));
}

SectorState SectorState::from_real(SectorBasisPtr basis, const Eigen::VectorXd& amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw InvalidArgument("cannot normalize a zero vector");
  return SectorState(std::move(basis), (amplitudes / norm).cast<std::complex<double>>());
}

std::complex<double> SectorState::amplitude(BasisState reg) const {
  return amplitudes_(static_cast<Eigen::Index>(basis_->rank(reg)));
}

SpectralPropagator::SpectralPropagator(const EigenDecomposition& decomp, const SectorState& initial)
    : decomp_(&decomp), basis_(initial.basis_ptr()) {
  if (decomp.size() != initial.basis().size())
    throw InvalidArgument("decomposition dimension " + std::to_string(decomp.size()) +
                          " does not match state dimension " + std::to_string(initial.basis().size()));
  overlaps_ = decomp.vectors.transpose().cast<std::complex<double>>() * initial.amplitudes();
}

SectorState SpectralPropagator::at(double t) const {
  const Eigen::VectorXcd phases =
      (decomp_->values.cast<std::complex<double>>() * std::complex<double>(0.0, -t)).array().exp().matrix();
  Eigen::VectorXcd amps = decomp_->vectors.cast<std::complex<double>>() * phases.cwiseProduct(overlaps_);
  return SectorState(basis_, std::move(amps));
}

std::complex<double> SpectralPropagator::amplitude(double t, std::size_t register_index) const {
  const auto row = static_cast<Eigen::Index>(register_index);
  std::complex<double> sum = 0.0;
  for (Eigen::Index k = 0; k < decomp_->values.size(); ++k)
    sum += decomp_->vectors(row, k) * std::polar(1.0, -decomp_->values(k) * t) * overlaps_(k);
  return sum;
}

SectorState evolve_state(const EigenDecomposition& decomp, const SectorState& initial, double t) {
  if (t == 0.0) {
    if (decomp.size() != initial.basis().size())
      throw InvalidArgument("decomposition dimension does not match state dimension");
    return initial;
  }
  return SpectralPropagator(decomp, initial).at(t);
}

double register_probability(const SectorState& state, BasisState reg) {
  return std::norm(state.amplitude(reg));
}

double expectation(const Eigen::MatrixXd& h, const SectorState& state) {
  const Eigen::VectorXcd& a = state.amplitudes();
  return (a.adjoint() * (h.cast<std::complex<double>>() * a))(0).real();
}

}  // namespace xxz
