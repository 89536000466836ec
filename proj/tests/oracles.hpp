#pragma once

// Reference implementations used only by the tests. Each one takes a different
// route from the library code it checks.

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <random>
#include <vector>

#include "xxz/entanglement.hpp"
#include "xxz/hamiltonian.hpp"
#include "xxz/spectral.hpp"

namespace oracle {

/// Hamiltonian from Kronecker products of Pauli matrices, site n on bit n-1,
/// hopping (J/4)(sx sx + sy sy), minus the all-down energy.
Eigen::MatrixXcd kron_hamiltonian(const xxz::ChainSpec& spec);

/// Cyclic Jacobi rotations; ascending eigenvalues.
Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd a);

/// Embeds a sector state into the full 2^L space.
Eigen::VectorXcd embed(const xxz::SectorState& state);

/// Partial trace of a full 2^L pure state onto (a, b), in |11>,|10>,|01>,|00> order.
Eigen::Matrix4cd full_partial_trace(const Eigen::VectorXcd& psi, int length, int a, int b);

/// Eigenvalues of rho * rho~ from the non-symmetric product (reliable for full-rank rho).
double concurrence_from_product(const Eigen::Matrix4cd& rho);

/// 2 |ad - bc| for amplitudes in |11>,|10>,|01>,|00> order.
double pure_concurrence(const Eigen::Vector4cd& amps);

Eigen::Matrix4cd random_density(std::mt19937_64& rng, int rank);
Eigen::Matrix2cd random_unitary(std::mt19937_64& rng);
Eigen::Vector4cd random_pure(std::mt19937_64& rng);
Eigen::VectorXd random_unit(std::mt19937_64& rng, Eigen::Index n);

/// All popcount-N masks of L bits, by brute-force filtering of 0..2^L-1.
std::vector<std::uint32_t> brute_sector(int length, int excitations);

}  // namespace oracle
