#include "xxz/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

constexpr double pi = std::numbers::pi;

BasisState pair_register(const DBandModel& m, int first, int second) {
  const int sites[] = {m.wrap(first), m.wrap(second)};
  return register_from_sites(m.length, sites);
}

}  // namespace

void DBandModel::validate() const {
  if (length < 6 || length > kMaxSites)
    throw InvalidArgument("d-band model needs 6 <= L <= " + std::to_string(kMaxSites) + ", got " +
                          std::to_string(length));
  if (n0 < 1 || n0 > length) throw InvalidArgument("defect site n0 outside 1..L");
  if (!(J > 0.0)) throw InvalidArgument("J must be positive");
  if (!(d > 0.0)) throw InvalidArgument("d must be positive");
  if (!(Delta >= 0.0)) throw InvalidArgument("Delta must be non-negative");
}

int DBandModel::wrap(int site) const { return ((site - 1) % length + length) % length + 1; }

ChainSpec DBandModel::chain() const {
  ChainSpec spec;
  spec.length = length;
  spec.J = J;
  spec.Delta = Delta;
  spec.epsilon = epsilon;
  spec.d = d;
  spec.defects = {n0, wrap(n0 + 1)};
  return spec;
}

std::vector<AnalyticState> one_excitation_defect_states(const DBandModel& model) {
  model.validate();
  const auto basis = enumerate_sector(model.length, 1);
  const std::size_t a = basis->rank(BasisState{1u << (model.n0 - 1)});
  const std::size_t b = basis->rank(BasisState{1u << (model.wrap(model.n0 + 1) - 1)});
  std::vector<AnalyticState> out;
  for (const double sign : {1.0, -1.0}) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis->size()));
    v(static_cast<Eigen::Index>(a)) = 1.0;
    v(static_cast<Eigen::Index>(b)) = sign;
    out.push_back({SectorState::from_real(basis, v), model.eps1() + model.d + sign * 0.5 * model.J});
  }
  return out;
}

std::vector<DBandState> dband_states_delta0(const DBandModel& model) {
  model.validate();
  if (model.Delta != 0.0) throw InvalidArgument("Bell-type d-band states are exact only for Delta = 0");
  const int L = model.length;
  const auto basis = enumerate_sector(L, 2);
  std::vector<DBandState> out;
  out.reserve(2 * static_cast<std::size_t>(L - 2));
  for (int k1 = 1; k1 <= 2; ++k1) {
    const double sign = k1 % 2 == 1 ? 1.0 : -1.0;  // (-1)^(k1+1)
    for (int k2 = 1; k2 <= L - 2; ++k2) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis->size()));
      for (int m = model.n0 + 2; m <= model.n0 + L - 1; ++m) {
        const double envelope = std::sin(pi * k2 * (m - model.n0 - 1) / (L - 1));
        v(static_cast<Eigen::Index>(basis->rank(pair_register(model, model.n0, m)))) = envelope;
        v(static_cast<Eigen::Index>(basis->rank(pair_register(model, model.n0 + 1, m)))) = sign * envelope;
      }
      const double energy =
          model.eps2() + model.d + model.J * std::cos(pi * k1 / 3.0) + model.J * std::cos(pi * k2 / (L - 1));
      out.push_back({SectorState::from_real(basis, v), energy, k1, k2});
    }
  }
  return out;
}

BetaRoots solve_beta(int length, double Delta) {
  if (length < 3) throw InvalidArgument("beta equation needs L >= 3");
  if (!(Delta > 0.0)) throw InvalidArgument("beta equation is defined for Delta > 0");
  const auto f = [&](double beta) {
    return 2.0 * Delta * std::sin(beta * (length - 2)) - std::sin(beta * (length - 1));
  };

  BetaRoots result;
  result.expected = static_cast<std::size_t>(length - 2);
  const int points = 100 * length;
  const auto grid = [&](int j) { return pi * j / points; };

  double prev = f(grid(1));
  for (int j = 1; j < points - 1; ++j) {
    const double next = f(grid(j + 1));
    if (prev == 0.0) {
      result.roots.push_back({grid(j), 0.0});
    } else if ((prev < 0.0) != (next < 0.0) && next != 0.0) {
      double lo = grid(j), hi = grid(j + 1), flo = prev;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      const double beta = std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
      const double residual = f(beta);
      if (std::abs(residual) > 1e-10) {
        std::ostringstream msg;
        msg << "bisection stalled at beta = " << beta << " with residual " << residual;
        throw NumericError(msg.str());
      }
      result.roots.push_back({beta, residual});
    }
    prev = next;
  }
  if (prev == 0.0) result.roots.push_back({grid(points - 1), 0.0});
  return result;
}

double shape_S(int x, double beta, double Delta) {
  return 2.0 * Delta * std::sin(beta * (x - 1)) - std::sin(beta * x);
}

double cmax_from_overlap(double norm_sq_times_s) {
  const double x = std::abs(norm_sq_times_s);
  return std::sqrt(x * x + x + 0.25) - std::sqrt(std::max(0.0, x * x - x + 0.25));
}

DBandGroundState dband_ground_state(const DBandModel& model) {
  model.validate();
  if (!(model.Delta > 0.0 && model.J * model.Delta < model.d))
    throw InvalidArgument("d-band ground-state ansatz requires 0 < Delta < d/J");
  const int L = model.length;
  BetaRoots roots = solve_beta(L, model.Delta);
  if (roots.roots.empty()) {
    std::ostringstream diag;
    diag << "L=" << L << " Delta=" << model.Delta << " scan_points=" << 100 * L << " real_roots=0";
    throw DegradedResult("no real beta root in (0, pi)", diag.str());
  }
  const double beta = roots.roots.back().beta;  // smallest cos(beta)

  const auto basis = enumerate_sector(L, 2);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis->size()));
  double s = 0.0, norm = 0.0;
  for (int m = model.n0 + 2; m <= model.n0 + L - 1; ++m) {
    const double on_first = shape_S(model.n0 + L - m, beta, model.Delta);
    const double on_second = shape_S(m - model.n0 - 1, beta, model.Delta);
    v(static_cast<Eigen::Index>(basis->rank(pair_register(model, model.n0, m)))) = on_first;
    v(static_cast<Eigen::Index>(basis->rank(pair_register(model, model.n0 + 1, m)))) = on_second;
    s += on_first * on_second;
    norm += on_first * on_first + on_second * on_second;
  }
  const double norm_sq = 1.0 / norm;
  const double energy = model.eps2() + model.d + model.J * std::cos(2.0 * pi / 3.0) + model.J * std::cos(beta);
  return DBandGroundState{SectorState::from_real(basis, v), energy, cmax_from_overlap(norm_sq * s), beta, s,
                          norm_sq, std::move(roots)};
}

int cluster_positions(int length, int excitations) { return length - excitations - 4; }

SectorState cluster_bell_state(int length, int excitations, int n0, int k1, int k2) {
  if (length < 6 || length > kMaxSites) throw InvalidArgument("cluster states need 6 <= L <= 24");
  if (n0 < 1 || n0 > length) throw InvalidArgument("defect site n0 outside 1..L");
  if (excitations < 2) throw InvalidArgument("cluster states need N >= 2");
  if (excitations - 1 > length - 6)
    throw InvalidArgument("cluster of N-1 = " + std::to_string(excitations - 1) +
                          " excitations does not fit: requires N-1 <= L-6 = " + std::to_string(length - 6));
  if (k1 != 1 && k1 != 2) throw InvalidArgument("k1 must be 1 or 2");
  const int positions = cluster_positions(length, excitations);
  if (k2 < 1 || k2 > positions)
    throw InvalidArgument("k2 must lie in 1.." + std::to_string(positions));

  DBandModel geometry;
  geometry.length = length;
  geometry.n0 = n0;
  const auto basis = enumerate_sector(length, excitations);
  const double sign = k1 == 1 ? 1.0 : -1.0;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis->size()));
  for (int m1 = n0 + 4; m1 <= n0 + length - excitations - 1; ++m1) {
    const double envelope = std::sin(pi * k2 * (m1 - n0 - 3) / (length - excitations - 3));
    std::vector<int> sites;
    for (int j = 0; j < excitations - 1; ++j) sites.push_back(geometry.wrap(m1 + j));
    sites.push_back(n0);
    const BasisState on_first = register_from_sites(length, sites);
    sites.back() = geometry.wrap(n0 + 1);
    const BasisState on_second = register_from_sites(length, sites);
    v(static_cast<Eigen::Index>(basis->rank(on_first))) = envelope;
    v(static_cast<Eigen::Index>(basis->rank(on_second))) = sign * envelope;
  }
  return SectorState::from_real(basis, v);
}

RabiDynamics rabi_dynamics(const DBandModel& model, std::span<const int> cluster_sites,
                           std::span<const double> times) {
  model.validate();
  const int second = model.wrap(model.n0 + 1);
  for (int site : cluster_sites) {
    if (site < 1 || site > model.length) throw InvalidArgument("cluster site outside 1..L");
    for (int forbidden : {model.wrap(model.n0 - 1), model.n0, second, model.wrap(model.n0 + 2)})
      if (site == forbidden)
        throw InvalidArgument("cluster site " + std::to_string(site) +
                              " must keep one empty site between the cluster and the defects");
  }
  std::vector<int> sites(cluster_sites.begin(), cluster_sites.end());
  sites.push_back(model.n0);
  const BasisState first_reg = register_from_sites(model.length, sites);

  // Both registers share the same diagonal energy; the hop across the defect bond splits them by J.
  const double center = diagonal_energy(model.chain(), first_reg);
  RabiDynamics out;
  out.e_plus = center + 0.5 * model.J;
  out.e_minus = center - 0.5 * model.J;
  out.p_first.reserve(times.size());
  out.p_second.reserve(times.size());
  for (double t : times) {
    const double c = std::cos((out.e_plus - out.e_minus) * t);
    out.p_first.push_back(0.5 * (1.0 + c));
    out.p_second.push_back(0.5 * (1.0 - c));
  }
  return out;
}

std::vector<double> bell_instants(double J, int count) {
  std::vector<double> out;
  for (int k = 0; k < count; ++k) out.push_back((2 * k + 1) * pi / (2.0 * J));
  return out;
}

}  // namespace xxz
