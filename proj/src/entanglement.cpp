#include "xxz/entanglement.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// sigma_y x sigma_y in the |11>,|10>,|01>,|00> ordering.
Eigen::Matrix4cd flip_operator() {
  Eigen::Matrix4cd y = Eigen::Matrix4cd::Zero();
  y(0, 3) = y(3, 0) = -1.0;
  y(1, 2) = y(2, 1) = 1.0;
  return y;
}

inline int slot_of(bool first_up, bool second_up) { return (first_up ? 0 : 2) + (second_up ? 0 : 1); }

}  // namespace

PairTracer::PairTracer(SectorBasisPtr basis, SitePair pair) : basis_(std::move(basis)) {
  if (!basis_) throw InvalidArgument("null sector basis");
  const int length = basis_->length();
  const auto [a, b] = pair;
  if (a < 1 || a > length || b < 1 || b > length)
    throw InvalidArgument("pair sites must lie in 1.." + std::to_string(length));
  if (a == b) throw InvalidArgument("pair sites must be distinct");

  const std::uint32_t bit_a = 1u << (a - 1);
  const std::uint32_t bit_b = 1u << (b - 1);
  const auto states = basis_->states();
  slot_.resize(states.size());
  partner_.resize(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const std::uint32_t env = states[i].bits & ~(bit_a | bit_b);
    slot_[i] = slot_of(states[i].bits & bit_a, states[i].bits & bit_b);
    for (int c = 0; c < 4; ++c) {
      const std::uint32_t bits = env | ((c & 2) ? 0u : bit_a) | ((c & 1) ? 0u : bit_b);
      const std::size_t j = basis_->find(BasisState{bits});
      partner_[i][c] = j == basis_->size() ? npos : j;
    }
  }
}

template <typename Vector>
TwoQubitDensity PairTracer::trace_impl(const Vector& amplitudes) const {
  if (static_cast<std::size_t>(amplitudes.size()) != slot_.size())
    throw InvalidArgument("amplitude vector does not match the tracer's sector dimension");
  TwoQubitDensity rho;
  for (std::size_t i = 0; i < slot_.size(); ++i) {
    const std::complex<double> amp = amplitudes(static_cast<Eigen::Index>(i));
    if (amp == 0.0) continue;
    for (int c = 0; c < 4; ++c) {
      const std::size_t j = partner_[i][c];
      if (j == npos) continue;
      rho.matrix(slot_[i], c) += amp * std::conj(std::complex<double>(amplitudes(static_cast<Eigen::Index>(j))));
    }
  }
  return rho;
}

TwoQubitDensity PairTracer::trace(const Eigen::VectorXcd& amplitudes) const { return trace_impl(amplitudes); }
TwoQubitDensity PairTracer::trace(const Eigen::VectorXd& amplitudes) const { return trace_impl(amplitudes); }

TwoQubitDensity reduced_density(const SectorState& state, SitePair pair) {
  return PairTracer(state.basis_ptr(), pair).trace(state.amplitudes());
}

TwoQubitDensity spin_flip(const TwoQubitDensity& rho) {
  const Eigen::Matrix4cd y = flip_operator();
  return TwoQubitDensity{y * rho.matrix.conjugate() * y};
}

std::array<double, 4> wootters_lambdas(const TwoQubitDensity& rho) {
  const double scale = std::max(1.0, rho.matrix.cwiseAbs().maxCoeff());
  const double herm = (rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (max |rho - rho^dag| = " << herm << ")";
    throw InvalidArgument(msg.str());
  }

  // With rho = W W^dag the eigenvalues of rho*rho~ are the squared singular values of
  // the complex-symmetric matrix W^T Y W. This avoids the non-normal product, whose
  // zero eigenvalues come out as O(eps^(1/3)) complex noise for rank-deficient rho.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.matrix);
  Eigen::Vector4d mu = es.eigenvalues();
  if (mu.minCoeff() < -1e-8 * scale) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << mu.minCoeff();
    throw NumericError(msg.str());
  }
  mu = mu.cwiseMax(0.0);
  const Eigen::Matrix4cd w = es.eigenvectors() * mu.cwiseSqrt().cast<std::complex<double>>().asDiagonal();
  const Eigen::Matrix4cd tau = w.transpose() * flip_operator() * w;
  const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4cd>(tau).singularValues();
  return {sv(0), sv(1), sv(2), sv(3)};
}

double concurrence(const TwoQubitDensity& rho) {
  const auto l = wootters_lambdas(rho);
  return std::clamp(l[0] - l[1] - l[2] - l[3], 0.0, 1.0);
}

double entanglement_of_formation(double c) {
  if (!(c >= 0.0 && c <= 1.0)) throw InvalidArgument("concurrence must lie in [0, 1]");
  const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
  const auto plogp = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  return plogp(x) + plogp(1.0 - x);
}

std::vector<double> eigenstate_concurrences(const EigenDecomposition& decomp, const PairTracer& tracer) {
  if (decomp.size() != tracer.basis().size())
    throw InvalidArgument("decomposition does not match the tracer's sector");
  std::vector<double> out(decomp.size());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = concurrence(tracer.trace(Eigen::VectorXd(decomp.vectors.col(static_cast<Eigen::Index>(k)))));
  return out;
}

MaxConcurrence max_concurrence(const EigenDecomposition& decomp, const PairTracer& tracer) {
  const auto values = eigenstate_concurrences(decomp, tracer);
  MaxConcurrence best;
  if (values.empty()) return best;
  best.c_max = -1.0;
  // Ascending energy order, strict comparison: the first maximizer wins ties.
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] > best.c_max) {
      best.c_max = values[k];
      best.index = k;
    }
  }
  best.energy = decomp.values(static_cast<Eigen::Index>(best.index));
  best.degenerate = decomp.degenerate[best.index];
  return best;
}

MaxConcurrence max_concurrence_over_eigenstates(const ChainSpec& spec, int excitations, SitePair pair) {
  const auto basis = enumerate_sector(spec.length, excitations);
  const auto h = build_sector_hamiltonian(spec, basis);
  return max_concurrence(eigh(h.matrix), PairTracer(basis, pair));
}

}  // namespace xxz
