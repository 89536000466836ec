#pragma once

#include <fstream>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xxz/errors.hpp"
#include "xxz/experiments.hpp"

namespace xxz {

inline constexpr std::string_view kSweepHeader = "delta,L,N,defect_a,defect_b,c_max,energy,eig_index,degenerate";
inline constexpr std::string_view kDynamicsHeader = "t,register,probability,concurrence";
inline constexpr std::string_view kComparisonHeader =
    "delta,L,numeric_c_max,analytic_c_max,beta_roots,numeric_ground_energy,analytic_ground_energy,"
    "dband_energy_mismatch,ground_overlap";
inline constexpr std::string_view kSpectrumHeader = "L,N,index,energy,concurrence,degenerate";

/// Scientific notation with 12 significant digits.
std::string format_real(double v);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);
void write_dynamics_csv(std::ostream& out, std::span<const DynamicsRow> rows);
void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows);

struct SpectrumRow {
  int length;
  int excitations;
  std::size_t index;
  double energy;
  double concurrence;
  bool degenerate;
};
void write_spectrum_csv(std::ostream& out, std::span<const SpectrumRow> rows);

/// Readers reject any header other than the exact schema header.
std::vector<SweepRow> read_sweep_csv(std::istream& in);
std::vector<DynamicsRow> read_dynamics_csv(std::istream& in);

/// Opens `path` for writing and hands the stream to `write`; throws IoError on failure.
template <typename Write>
void write_file(const std::string& path, Write&& write) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write(out);
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace xxz
