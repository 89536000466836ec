#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xxz/basis.hpp"
#include "xxz/hamiltonian.hpp"

namespace xxz {

enum class Mode { sweep, evolve, compare, spectrum, oracle };

std::string_view mode_name(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

/// Strictly increasing real grid, remembering the start:stop:step form it came from.
struct Grid {
  std::vector<double> values;
  std::optional<std::array<double, 3>> range;

  static Grid from_range(double start, double stop, double step);
  bool empty() const { return values.empty(); }
};

inline constexpr int kConfigVersion = 1;

/// A run description. See docs/config-format.md for the text syntax.
struct RunConfig {
  int version = kConfigVersion;
  std::optional<Mode> mode;
  ChainSpec chain;
  Grid delta_grid;
  std::vector<int> excitations;  // key "N"
  std::optional<BasisState> initial_register;
  Grid t_grid;
  std::vector<BasisState> tracked_registers;
  std::string output_path;

  /// Throws ParseError naming the first key a mode needs but lacks.
  void require_for(Mode mode) const;
};

/// Parses the flat `key = value` format and applies defaults (J=1, epsilon=0, d=10, defects=(1,2)).
/// Throws ParseError carrying the offending key.
RunConfig parse_config(std::string_view text);

/// Canonical text form; parse_config(format_config(c)) reproduces c exactly.
std::string format_config(const RunConfig& config);

}  // namespace xxz
