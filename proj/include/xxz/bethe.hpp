#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "xxz/hamiltonian.hpp"
#include "xxz/spectral.hpp"

namespace xxz {

/// Ring with nearest-neighbour defects (n0, n0+1) in the regime d >> J, where the
/// defects decouple from an open chain of L-2 ordinary qubits.
struct DBandModel {
  int length = 8;
  int n0 = 1;
  double Delta = 0.0;
  double J = 1.0;
  double d = 10.0;
  double epsilon = 0.0;

  void validate() const;
  /// Site label reduced to 1..L.
  int wrap(int site) const;
  /// The same ring as a ChainSpec.
  ChainSpec chain() const;
  /// Single-excitation level of an ordinary qubit: eps - J*Delta.
  double eps1() const { return epsilon - J * Delta; }
  /// Level of two isolated excitations: 2 eps - 2 J Delta.
  double eps2() const { return 2.0 * epsilon - 2.0 * J * Delta; }
};

struct AnalyticState {
  SectorState state;
  double energy;
};

/// [phi(n0) + phi(n0+1)]/sqrt2 at eps1 + d + J/2, then the antisymmetric state at eps1 + d - J/2.
std::vector<AnalyticState> one_excitation_defect_states(const DBandModel& model);

struct DBandState {
  SectorState state;
  double energy;
  int k1;
  int k2;
};

/// The 2(L-2) Bell-type product states of the decoupled problem at Delta = 0.
std::vector<DBandState> dband_states_delta0(const DBandModel& model);

struct BetaRoot {
  double beta;
  double residual;  // 2 Delta sin(beta(L-2)) - sin(beta(L-1))
};

struct BetaRoots {
  std::vector<BetaRoot> roots;  // ascending in (0, pi)
  /// Number of roots for a complete real set; fewer means bound states left the real axis.
  std::size_t expected = 0;
  bool complete() const { return roots.size() == expected; }
};

/// Real roots of 2 Delta sin[beta(L-2)] = sin[beta(L-1)] in (0, pi), by sign-change
/// scan on 100 L grid points and bisection.
BetaRoots solve_beta(int length, double Delta);

/// S(x) = 2 Delta sin[beta(x-1)] - sin[beta x].
double shape_S(int x, double beta, double Delta);

struct DBandGroundState {
  SectorState state;
  double energy;
  double c_max;  // closed-form estimate
  double beta;
  double s;            // sum_m S(n0+L-m) S(m-n0-1)
  double norm_sq;      // |A|^2
  BetaRoots roots;
};

/// Lowest d-band state for 0 < Delta < d/J from the S(x) ansatz with k1 = 2 and the
/// root of largest beta. Throws DegradedResult when no real root exists.
DBandGroundState dband_ground_state(const DBandModel& model);

/// sqrt(x^2 + x + 1/4) - sqrt(x^2 - x + 1/4) with x = |A|^2 |s|.
double cmax_from_overlap(double norm_sq_times_s);

/// Bell state of one defect excitation with a bound cluster of N-1 excitations at least
/// two sites from both defects, with a standing-wave envelope of index k2 over the
/// cluster positions. Requires N-1 <= L-6.
SectorState cluster_bell_state(int length, int excitations, int n0, int k1, int k2);

/// Number of admissible cluster positions, L - N - 4 (may be <= 0).
int cluster_positions(int length, int excitations);

struct RabiDynamics {
  std::vector<double> p_first;   // excitation on n0
  std::vector<double> p_second;  // excitation on n0+1
  double e_plus;
  double e_minus;
};

/// First-order two-level dynamics of phi(n0, cluster) <-> phi(n0+1, cluster).
RabiDynamics rabi_dynamics(const DBandModel& model, std::span<const int> cluster_sites,
                           std::span<const double> times);

/// Times k pi / (2J) for odd k, the first `count` of them.
std::vector<double> bell_instants(double J, int count);

}  // namespace xxz
