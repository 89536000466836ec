#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "xxz/errors.hpp"
#include "xxz/hamiltonian.hpp"
#include "xxz/spectral.hpp"

using namespace xxz;

namespace {

Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = g(rng);
  return (a + a.transpose()) / 2.0;
}

ChainSpec fig2_like(int length, double Delta) {
  ChainSpec spec;
  spec.length = length;
  spec.Delta = Delta;
  return spec;
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("eigh on a 2x2 matrix") {
    Eigen::Matrix2d m;
    m << 2, 1, 1, 2;
    auto e = eigh(m);
    CHECK(e.values(0) == doctest::Approx(1.0));
    CHECK(e.values(1) == doctest::Approx(3.0));
    CHECK(std::abs(e.vectors(0, 0)) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(e.degenerate == std::vector<bool>{false, false});
  }

  TEST_CASE("identity is flagged fully degenerate") {
    auto e = eigh(Eigen::MatrixXd::Identity(3, 3));
    CHECK(e.degenerate == std::vector<bool>{true, true, true});
    CHECK(nearly_degenerate(1.0, 1.0 + 5e-9));
    CHECK_FALSE(nearly_degenerate(1.0, 1.0 + 2e-8));
    CHECK(nearly_degenerate(1000.0, 1000.0 + 5e-6));
  }

  TEST_CASE("residual and orthonormality on random symmetric matrices") {
    std::mt19937_64 rng(1);
    for (Eigen::Index n : {1, 5, 40, 200}) {
      const auto a = random_symmetric(rng, n);
      auto e = eigh(a);
      const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
      const Eigen::MatrixXd residual = a * e.vectors - e.vectors * e.values.asDiagonal();
      CHECK(residual.cwiseAbs().maxCoeff() < 1e-10 * scale * n);
      const Eigen::MatrixXd gram = e.vectors.transpose() * e.vectors - Eigen::MatrixXd::Identity(n, n);
      CHECK(gram.cwiseAbs().maxCoeff() < 1e-12 * n);
      for (Eigen::Index k = 1; k < n; ++k) CHECK(e.values(k - 1) <= e.values(k));
      CHECK((eigvalsh(a) - e.values).cwiseAbs().maxCoeff() < 1e-10 * scale);
      if (n <= 40) CHECK((oracle::jacobi_eigenvalues(a) - e.values).cwiseAbs().maxCoeff() < 1e-10 * scale);
    }
  }

  TEST_CASE("eigh rejects non-symmetric and non-square input") {
    Eigen::Matrix2d m;
    m << 1, 2, 0, 1;
    CHECK_THROWS_AS(eigh(m), InvalidArgument);
    CHECK_THROWS_AS(eigh(Eigen::MatrixXd::Zero(2, 3)), InvalidArgument);
  }

  TEST_CASE("state construction") {
    auto basis = enumerate_sector(4, 2);
    CHECK_THROWS_AS(SectorState(basis, Eigen::VectorXcd::Zero(3)), InvalidArgument);
    CHECK_THROWS_AS(SectorState(basis, Eigen::VectorXcd::Ones(6)), InvalidArgument);
    CHECK_THROWS_AS(SectorState::from_real(basis, Eigen::VectorXd::Zero(6)), InvalidArgument);
    auto s = SectorState::from_real(basis, Eigen::VectorXd::Ones(6));
    CHECK(s.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(SectorState::from_register(basis, BasisState{0b111}), NotFound);
  }

  TEST_CASE("register probabilities") {
    auto basis = enumerate_sector(6, 2);
    auto reg = BasisState{0b000101};
    auto s = SectorState::from_register(basis, reg);
    CHECK(register_probability(s, reg) == 1.0);
    CHECK(register_probability(s, BasisState{0b000011}) == 0.0);
    CHECK_THROWS_AS(register_probability(s, BasisState{0b1}), NotFound);
  }

  TEST_CASE("evolution preserves norm and energy and composes") {
    const auto spec = fig2_like(10, 3.0);
    auto basis = enumerate_sector(10, 3);
    auto h = build_sector_hamiltonian(spec, basis);
    auto decomp = eigh(h.matrix);
    const int sites[] = {1, 5, 6};
    auto psi0 = SectorState::from_register(basis, register_from_sites(10, sites));
    CHECK((evolve_state(decomp, psi0, 0.0).amplitudes() - psi0.amplitudes()).norm() == 0.0);
    const double norm = h.matrix.cwiseAbs().maxCoeff();
    const double e0 = expectation(h.matrix, psi0);
    SpectralPropagator prop(decomp, psi0);
    for (double t : {0.3, 1.7, 25.0, 400.0}) {
      auto psi = prop.at(t);
      double total = 0.0;
      for (auto s : basis->states()) total += register_probability(psi, s);
      CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(std::abs(expectation(h.matrix, psi) - e0) < 1e-9 * norm);
      for (std::size_t i = 0; i < basis->size(); i += 17)
        CHECK(std::abs(prop.amplitude(t, i) - psi.amplitudes()(static_cast<Eigen::Index>(i))) < 1e-13);
    }
    auto a = evolve_state(decomp, evolve_state(decomp, psi0, 1.25), 2.5);
    auto b = evolve_state(decomp, psi0, 3.75);
    CHECK((a.amplitudes() - b.amplitudes()).norm() < 1e-10);
  }

  TEST_CASE("evolution agrees with a Taylor-series propagator") {
    const auto spec = fig2_like(8, 1.5);
    auto basis = enumerate_sector(8, 2);
    auto h = build_sector_hamiltonian(spec, basis);
    auto decomp = eigh(h.matrix);
    auto psi0 = SectorState::from_register(basis, BasisState{0b1001});
    // exp(-iHt) by repeated small Taylor steps.
    const double t = 2.0;
    const int steps = 400;
    const std::complex<double> step(0.0, -t / steps);
    Eigen::VectorXcd psi = psi0.amplitudes();
    const Eigen::MatrixXcd hc = h.matrix.cast<std::complex<double>>();
    for (int s = 0; s < steps; ++s) {
      Eigen::VectorXcd term = psi, sum = psi;
      for (int k = 1; k <= 12; ++k) {
        term = (step / static_cast<double>(k)) * (hc * term).eval();
        sum += term;
      }
      psi = sum;
    }
    CHECK((evolve_state(decomp, psi0, t).amplitudes() - psi).norm() < 1e-10);
  }

  TEST_CASE("Rabi oscillation between defect registers at large anisotropy") {
    const auto spec = fig2_like(12, 50.0);
    auto basis = enumerate_sector(12, 4);
    auto decomp = eigh(build_sector_hamiltonian(spec, basis).matrix);
    const int first[] = {1, 6, 7, 8};
    const auto reg = register_from_sites(12, first);
    SpectralPropagator prop(decomp, SectorState::from_register(basis, reg));
    const std::size_t idx = basis->rank(reg);
    for (double t = 0.0; t <= 3.0 * std::numbers::pi; t += 0.05) {
      const double p = std::norm(prop.amplitude(t, idx));
      CHECK(std::abs(p - 0.5 * (1.0 + std::cos(t))) < 0.02);
    }
  }
}
