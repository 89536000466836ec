#include "xxz/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else if (ch != '\r') {
      fields.back() += ch;
    }
  }
  if (quoted) throw ParseError("line " + std::to_string(line_no), "unterminated quoted field");
  return fields;
}

double field_real(const std::string& s, std::size_t line_no) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("line " + std::to_string(line_no), "bad number '" + s + "'");
  return v;
}

template <typename Int>
Int field_int(const std::string& s, std::size_t line_no) {
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("line " + std::to_string(line_no), "bad integer '" + s + "'");
  return v;
}

// Reads the header, checks it, and feeds each data row's fields to `row`.
template <typename Row>
void read_table(std::istream& in, std::string_view header, std::size_t columns, Row&& row) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("header", "missing header line");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header) throw ParseError("header", "expected '" + std::string(header) + "', got '" + line + "'");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line, line_no);
    if (fields.size() != columns)
      throw ParseError("line " + std::to_string(line_no),
                       "expected " + std::to_string(columns) + " fields, got " + std::to_string(fields.size()));
    row(fields, line_no);
  }
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows)
    out << format_real(r.Delta) << ',' << r.length << ',' << r.excitations << ',' << r.defect_a << ','
        << r.defect_b << ',' << format_real(r.c_max) << ',' << format_real(r.energy) << ',' << r.eig_index << ','
        << (r.degenerate ? 1 : 0) << '\n';
}

void write_dynamics_csv(std::ostream& out, std::span<const DynamicsRow> rows) {
  out << kDynamicsHeader << '\n';
  // Register labels contain commas and are always quoted.
  for (const auto& r : rows)
    out << format_real(r.t) << ",\"" << register_label(r.reg) << "\"," << format_real(r.probability) << ','
        << format_real(r.concurrence) << '\n';
}

void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows) {
  out << kComparisonHeader << '\n';
  for (const auto& r : rows)
    out << format_real(r.Delta) << ',' << r.length << ',' << format_real(r.numeric_c_max) << ','
        << format_real(r.analytic_c_max) << ',' << r.beta_roots << ',' << format_real(r.numeric_ground_energy)
        << ',' << format_real(r.analytic_ground_energy) << ',' << format_real(r.dband_energy_mismatch) << ','
        << format_real(r.ground_overlap) << '\n';
}

void write_spectrum_csv(std::ostream& out, std::span<const SpectrumRow> rows) {
  out << kSpectrumHeader << '\n';
  for (const auto& r : rows)
    out << r.length << ',' << r.excitations << ',' << r.index << ',' << format_real(r.energy) << ','
        << format_real(r.concurrence) << ',' << (r.degenerate ? 1 : 0) << '\n';
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::vector<SweepRow> rows;
  read_table(in, kSweepHeader, 9, [&](const std::vector<std::string>& f, std::size_t n) {
    const int flag = field_int<int>(f[8], n);
    if (flag != 0 && flag != 1) throw ParseError("line " + std::to_string(n), "degenerate flag must be 0 or 1");
    rows.push_back(SweepRow{field_real(f[0], n), field_int<int>(f[1], n), field_int<int>(f[2], n),
                            field_int<int>(f[3], n), field_int<int>(f[4], n), field_real(f[5], n),
                            field_real(f[6], n), field_int<std::size_t>(f[7], n), flag == 1});
  });
  return rows;
}

std::vector<DynamicsRow> read_dynamics_csv(std::istream& in) {
  std::vector<DynamicsRow> rows;
  read_table(in, kDynamicsHeader, 4, [&](const std::vector<std::string>& f, std::size_t n) {
    BasisState reg;
    try {
      reg = parse_register_label(kMaxSites, f[1]);
    } catch (const InvalidArgument& e) {
      throw ParseError("line " + std::to_string(n), e.what());
    }
    rows.push_back(DynamicsRow{field_real(f[0], n), reg, field_real(f[2], n), field_real(f[3], n)});
  });
  return rows;
}

}  // namespace xxz
