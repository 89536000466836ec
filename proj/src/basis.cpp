#include "xxz/basis.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "xxz/errors.hpp"

namespace xxz {

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return result;
}

SectorBasis::SectorBasis(int length, int excitations) : length_(length), excitations_(excitations) {
  if (length <= 0 || length > kMaxSites)
    throw InvalidArgument("sector length must be in 1.." + std::to_string(kMaxSites) + ", got " +
                          std::to_string(length));
  if (excitations < 0 || excitations > length)
    throw InvalidArgument("excitation count " + std::to_string(excitations) + " outside 0.." +
                          std::to_string(length));

  binom_.assign(length + 1, std::vector<std::size_t>(length + 1, 0));
  for (int n = 0; n <= length; ++n) {
    binom_[n][0] = 1;
    for (int k = 1; k <= n; ++k) binom_[n][k] = binom_[n - 1][k - 1] + (k <= n - 1 ? binom_[n - 1][k] : 0);
  }

  states_.reserve(binom_[length][excitations]);
  if (excitations == 0) {
    states_.push_back(BasisState{0});
    return;
  }
  // Gosper's hack walks fixed-popcount masks in ascending order.
  const std::uint64_t limit = std::uint64_t{1} << length;
  std::uint64_t v = (std::uint64_t{1} << excitations) - 1;
  while (v < limit) {
    states_.push_back(BasisState{static_cast<std::uint32_t>(v)});
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
}

bool SectorBasis::contains(BasisState s) const {
  return std::popcount(s.bits) == excitations_ && (std::uint64_t{s.bits} >> length_) == 0;
}

std::size_t SectorBasis::find(BasisState s) const {
  if (!contains(s)) return size();
  std::size_t r = 0;
  int k = 0;
  for (std::uint32_t b = s.bits; b != 0; b &= b - 1) {
    ++k;
    r += binom_[std::countr_zero(b)][k];
  }
  return r;
}

std::size_t SectorBasis::rank(BasisState s) const {
  const std::size_t r = find(s);
  if (r == size())
    throw NotFound(register_label(s) + " is not in sector (L=" + std::to_string(length_) +
                   ", N=" + std::to_string(excitations_) + ")");
  return r;
}

BasisState SectorBasis::unrank(std::size_t index) const {
  if (index >= states_.size())
    throw NotFound("index " + std::to_string(index) + " outside sector of size " + std::to_string(size()));
  return states_[index];
}

SectorBasisPtr enumerate_sector(int length, int excitations) {
  return std::make_shared<const SectorBasis>(length, excitations);
}

BasisState register_from_sites(int length, std::span<const int> sites) {
  if (length <= 0 || length > kMaxSites) throw InvalidArgument("invalid chain length " + std::to_string(length));
  BasisState s;
  for (int site : sites) {
    if (site < 1 || site > length)
      throw InvalidArgument("site " + std::to_string(site) + " outside 1.." + std::to_string(length));
    const std::uint32_t bit = 1u << (site - 1);
    if (s.bits & bit) throw InvalidArgument("duplicate site " + std::to_string(site));
    s.bits |= bit;
  }
  return s;
}

std::vector<int> occupied_sites(BasisState state) {
  std::vector<int> sites;
  for (std::uint32_t b = state.bits; b != 0; b &= b - 1) sites.push_back(std::countr_zero(b) + 1);
  return sites;
}

std::string register_label(BasisState state) {
  std::string out = "phi(";
  bool first = true;
  for (int site : occupied_sites(state)) {
    if (!first) out += ',';
    out += std::to_string(site);
    first = false;
  }
  out += ')';
  return out;
}

BasisState parse_register_label(int length, std::string_view label) {
  constexpr std::string_view prefix = "phi(";
  if (!label.starts_with(prefix) || !label.ends_with(')'))
    throw InvalidArgument("malformed register label '" + std::string(label) + "'");
  std::string_view body = label.substr(prefix.size(), label.size() - prefix.size() - 1);
  std::vector<int> sites;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view token = body.substr(0, comma);
    int site = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), site);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw InvalidArgument("malformed site '" + std::string(token) + "' in register label");
    sites.push_back(site);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (body.empty()) throw InvalidArgument("trailing comma in register label");
  }
  return register_from_sites(length, sites);
}

}  // namespace xxz
