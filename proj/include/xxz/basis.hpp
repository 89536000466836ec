#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xxz {

inline constexpr int kMaxSites = 24;

/// Spin configuration of a chain: bit n-1 is set iff site n carries an excitation (spin up).
struct BasisState {
  std::uint32_t bits = 0;

  constexpr bool occupied(int site) const { return (bits >> (site - 1)) & 1u; }
  constexpr int excitations() const { return std::popcount(bits); }

  friend constexpr auto operator<=>(BasisState, BasisState) = default;
};

/// All configurations of L sites carrying exactly N excitations, in ascending bitmask order.
///
/// Ranking uses the combinatorial number system, which enumerates fixed-popcount
/// masks in exactly ascending integer order, so rank() is O(N) and needs no search.
class SectorBasis {
public:
  SectorBasis(int length, int excitations);

  int length() const { return length_; }
  int excitations() const { return excitations_; }
  std::size_t size() const { return states_.size(); }
  std::span<const BasisState> states() const { return states_; }

  bool contains(BasisState s) const;
  /// Position of s in states(); throws NotFound if s is outside the sector.
  std::size_t rank(BasisState s) const;
  /// Same as rank() but returns size() for non-members instead of throwing.
  std::size_t find(BasisState s) const;
  BasisState unrank(std::size_t index) const;

private:
  int length_;
  int excitations_;
  std::vector<BasisState> states_;
  std::vector<std::vector<std::size_t>> binom_;  // binom_[n][k] = C(n,k), n <= length
};

using SectorBasisPtr = std::shared_ptr<const SectorBasis>;

std::size_t binomial(int n, int k);

SectorBasisPtr enumerate_sector(int length, int excitations);

/// Register built from 1-based site labels. Throws InvalidArgument on duplicates or out-of-range sites.
BasisState register_from_sites(int length, std::span<const int> sites);

/// Occupied 1-based sites, ascending.
std::vector<int> occupied_sites(BasisState state);

/// "phi(1,6,7,8)"; the vacuum is "phi()".
std::string register_label(BasisState state);
/// Inverse of register_label; validates sites against the chain length.
BasisState parse_register_label(int length, std::string_view label);

}  // namespace xxz
