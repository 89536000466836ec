#include "xxz/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

// Site following n on the ring, 0-based.
inline int next_bit(int n, int length) { return n + 1 == length ? 0 : n + 1; }

// Calls visit(partner) for every register reachable by one exchange across a bond.
template <typename Visit>
void for_each_hop(BasisState s, int length, Visit&& visit) {
  for (int n = 0; n < length; ++n) {
    const int m = next_bit(n, length);
    const bool up_n = (s.bits >> n) & 1u;
    const bool up_m = (s.bits >> m) & 1u;
    if (up_n != up_m) visit(BasisState{s.bits ^ (1u << n) ^ (1u << m)});
  }
}

}  // namespace

void ChainSpec::validate() const {
  if (length < 3 || length > kMaxSites)
    throw InvalidArgument("chain length must be in 3.." + std::to_string(kMaxSites) + ", got " +
                          std::to_string(length));
  if (!(J > 0.0) || !std::isfinite(J)) throw InvalidArgument("J must be positive and finite");
  if (!(d >= 0.0) || !std::isfinite(d)) throw InvalidArgument("d must be non-negative and finite");
  if (!(Delta >= 0.0) || !std::isfinite(Delta)) throw InvalidArgument("Delta must be non-negative and finite");
  if (!std::isfinite(epsilon)) throw InvalidArgument("epsilon must be finite");
  const auto [a, b] = defects;
  if (a < 1 || a > length || b < 1 || b > length)
    throw InvalidArgument("defect sites must lie in 1.." + std::to_string(length));
  if (a == b) throw InvalidArgument("defect sites must be distinct");
}

std::vector<double> site_fields(const ChainSpec& spec) {
  std::vector<double> fields(spec.length, spec.epsilon);
  fields[spec.defects.first - 1] += spec.d;
  fields[spec.defects.second - 1] += spec.d;
  return fields;
}

double diagonal_energy(const ChainSpec& spec, BasisState state) {
  // Flipping site n from down to up costs eps_n; every bond whose ends disagree
  // costs -J*Delta/2 relative to the aligned all-down reference.
  double energy = 0.0;
  for (int n = 0; n < spec.length; ++n) {
    if ((state.bits >> n) & 1u) energy += spec.epsilon + (spec.is_defect(n + 1) ? spec.d : 0.0);
    const bool up_n = (state.bits >> n) & 1u;
    const bool up_m = (state.bits >> next_bit(n, spec.length)) & 1u;
    if (up_n != up_m) energy -= 0.5 * spec.J * spec.Delta;
  }
  return energy;
}

SectorHamiltonian build_sector_hamiltonian(const ChainSpec& spec, SectorBasisPtr basis,
                                           std::size_t dimension_cap) {
  spec.validate();
  if (!basis) throw InvalidArgument("null sector basis");
  if (basis->length() != spec.length)
    throw InvalidArgument("basis length " + std::to_string(basis->length()) + " does not match chain length " +
                          std::to_string(spec.length));
  const std::size_t dim = basis->size();
  if (dim > dimension_cap)
    throw ResourceError("sector dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(dimension_cap));

  SectorHamiltonian h{basis, Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim))};
  const double hop = 0.5 * spec.J;
  const auto states = basis->states();
  for (std::size_t i = 0; i < dim; ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    h.matrix(row, row) = diagonal_energy(spec, states[i]);
    for_each_hop(states[i], spec.length, [&](BasisState partner) {
      const auto col = static_cast<Eigen::Index>(basis->rank(partner));
      if (col > row) {
        h.matrix(row, col) += hop;
        h.matrix(col, row) += hop;
      }
    });
  }
  return h;
}

Eigen::MatrixXd full_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  if (spec.length > kMaxFullLength)
    throw ResourceError("full Hamiltonian limited to L <= " + std::to_string(kMaxFullLength));
  const Eigen::Index dim = Eigen::Index{1} << spec.length;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const double hop = 0.5 * spec.J;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const BasisState s{static_cast<std::uint32_t>(i)};
    h(i, i) = diagonal_energy(spec, s);
    for_each_hop(s, spec.length, [&](BasisState partner) { h(i, static_cast<Eigen::Index>(partner.bits)) += hop; });
  }
  return h;
}

}  // namespace xxz
