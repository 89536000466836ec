#include "xxz/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "xxz/errors.hpp"

namespace xxz {

namespace {

constexpr std::array<std::string_view, 14> kKeys = {
    "version", "mode", "L", "J", "Delta", "epsilon", "d", "defects", "N",
    "delta_grid", "initial_register", "t_grid", "tracked_registers", "output_path"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(const std::string& key, std::string_view token) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value))
    throw ParseError(key, "expected a real number, got '" + std::string(token) + "'");
  return value;
}

int to_int(const std::string& key, std::string_view token) {
  token = trim(token);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(key, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

// "[a, b, c]", "(a, b)" or "a, b, c".
std::vector<std::string_view> split_list(const std::string& key, std::string_view value) {
  value = trim(value);
  if (!value.empty() && (value.front() == '[' || value.front() == '(')) {
    const char close = value.front() == '[' ? ']' : ')';
    if (value.back() != close) throw ParseError(key, "unbalanced brackets");
    value = trim(value.substr(1, value.size() - 2));
  }
  std::vector<std::string_view> out;
  if (value.empty()) throw ParseError(key, "list must be nonempty");
  while (true) {
    const auto comma = value.find(',');
    out.push_back(trim(value.substr(0, comma)));
    if (out.back().empty()) throw ParseError(key, "empty list element");
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

Grid to_grid(const std::string& key, std::string_view value) {
  if (value.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    while (true) {
      const auto colon = value.find(':');
      parts.push_back(to_double(key, value.substr(0, colon)));
      if (colon == std::string_view::npos) break;
      value.remove_prefix(colon + 1);
    }
    if (parts.size() != 3) throw ParseError(key, "range must be start:stop:step");
    try {
      return Grid::from_range(parts[0], parts[1], parts[2]);
    } catch (const InvalidArgument& e) {
      throw ParseError(key, e.what());
    }
  }
  Grid grid;
  for (auto token : split_list(key, value)) grid.values.push_back(to_double(key, token));
  for (std::size_t i = 1; i < grid.values.size(); ++i)
    if (!(grid.values[i] > grid.values[i - 1])) throw ParseError(key, "grid must be strictly increasing");
  return grid;
}

BasisState to_register(const std::string& key, int length, std::string_view value) {
  value = trim(value);
  try {
    if (value.starts_with("phi(")) return parse_register_label(length, value);
    std::vector<int> sites;
    for (auto token : split_list(key, value)) sites.push_back(to_int(key, token));
    return register_from_sites(length, sites);
  } catch (const InvalidArgument& e) {
    throw ParseError(key, e.what());
  }
}

std::vector<BasisState> to_registers(const std::string& key, int length, std::string_view value) {
  std::vector<BasisState> out;
  value = trim(value);
  while (!value.empty()) {
    if (!value.starts_with("phi(")) throw ParseError(key, "expected phi(...) register labels");
    const auto close = value.find(')');
    if (close == std::string_view::npos) throw ParseError(key, "unterminated register label");
    out.push_back(to_register(key, length, value.substr(0, close + 1)));
    value = trim(value.substr(close + 1));
    if (!value.empty() && (value.front() == ';' || value.front() == ',')) value = trim(value.substr(1));
  }
  if (out.empty()) throw ParseError(key, "register list must be nonempty");
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_grid(const Grid& grid) {
  if (grid.range) {
    const auto& r = *grid.range;
    return format_double(r[0]) + ":" + format_double(r[1]) + ":" + format_double(r[2]);
  }
  std::string out;
  for (std::size_t i = 0; i < grid.values.size(); ++i) out += (i ? ", " : "") + format_double(grid.values[i]);
  return out;
}

}  // namespace

std::string_view mode_name(Mode mode) {
  switch (mode) {
    case Mode::sweep: return "sweep";
    case Mode::evolve: return "evolve";
    case Mode::compare: return "compare";
    case Mode::spectrum: return "spectrum";
    case Mode::oracle: return "oracle";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (Mode m : {Mode::sweep, Mode::evolve, Mode::compare, Mode::spectrum, Mode::oracle})
    if (mode_name(m) == name) return m;
  return std::nullopt;
}

Grid Grid::from_range(double start, double stop, double step) {
  if (!(step > 0.0)) throw InvalidArgument("range step must be positive");
  if (!(stop >= start)) throw InvalidArgument("range stop must not precede start");
  Grid grid;
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  grid.values.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) grid.values.push_back(start + static_cast<double>(i) * step);
  grid.range = std::array<double, 3>{start, stop, step};
  return grid;
}

void RunConfig::require_for(Mode m) const {
  if (this->mode && *this->mode != m)
    throw ParseError("mode", "config declares mode '" + std::string(mode_name(*this->mode)) +
                                 "' but was run as '" + std::string(mode_name(m)) + "'");
  switch (m) {
    case Mode::sweep:
      if (delta_grid.empty()) throw ParseError("delta_grid", "required for sweep");
      if (excitations.empty()) throw ParseError("N", "required for sweep");
      break;
    case Mode::evolve:
      if (!initial_register) throw ParseError("initial_register", "required for evolve");
      if (t_grid.empty()) throw ParseError("t_grid", "required for evolve");
      break;
    case Mode::compare:
      if (delta_grid.empty()) throw ParseError("delta_grid", "required for compare");
      break;
    case Mode::spectrum:
      if (excitations.empty()) throw ParseError("N", "required for spectrum");
      break;
    case Mode::oracle:
      break;
  }
}

RunConfig parse_config(std::string_view text) {
  std::map<std::string, std::string, std::less<>> entries;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no), "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) throw ParseError(key, "unknown key");
    if (value.empty()) throw ParseError(key, "missing value");
    if (!entries.emplace(key, std::string(value)).second) throw ParseError(key, "duplicate key");
  }

  RunConfig config;
  const auto get = [&](std::string_view key) -> const std::string* {
    const auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };

  if (auto v = get("version")) {
    config.version = to_int("version", *v);
    if (config.version != kConfigVersion)
      throw ParseError("version", "unsupported config version " + std::to_string(config.version));
  }
  if (auto v = get("mode")) {
    config.mode = parse_mode(*v);
    if (!config.mode) throw ParseError("mode", "unknown mode '" + *v + "'");
  }

  const auto L_text = get("L");
  if (!L_text) throw ParseError("L", "required key missing");
  ChainSpec& chain = config.chain;
  chain.length = to_int("L", *L_text);
  if (chain.length < 3 || chain.length > kMaxSites)
    throw ParseError("L", "must lie in 3.." + std::to_string(kMaxSites));
  if (auto v = get("J")) chain.J = to_double("J", *v);
  if (!(chain.J > 0.0)) throw ParseError("J", "must be positive");
  if (auto v = get("Delta")) chain.Delta = to_double("Delta", *v);
  if (!(chain.Delta >= 0.0)) throw ParseError("Delta", "must be non-negative");
  if (auto v = get("epsilon")) chain.epsilon = to_double("epsilon", *v);
  if (auto v = get("d")) chain.d = to_double("d", *v);
  if (!(chain.d >= 0.0)) throw ParseError("d", "must be non-negative");
  if (auto v = get("defects")) {
    const auto items = split_list("defects", *v);
    if (items.size() != 2) throw ParseError("defects", "expected exactly two sites");
    chain.defects = {to_int("defects", items[0]), to_int("defects", items[1])};
  }
  try {
    chain.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError("defects", e.what());
  }

  if (auto v = get("N")) {
    for (auto token : split_list("N", *v)) {
      const int n = to_int("N", token);
      if (n < 0 || n > chain.length) throw ParseError("N", "excitation count outside 0..L");
      if (!config.excitations.empty() && n <= config.excitations.back())
        throw ParseError("N", "excitation list must be strictly increasing");
      config.excitations.push_back(n);
    }
  }
  if (auto v = get("delta_grid")) {
    config.delta_grid = to_grid("delta_grid", *v);
    if (config.delta_grid.values.front() < 0.0) throw ParseError("delta_grid", "Delta must be non-negative");
  }
  if (auto v = get("initial_register")) config.initial_register = to_register("initial_register", chain.length, *v);
  if (auto v = get("t_grid")) config.t_grid = to_grid("t_grid", *v);
  if (auto v = get("tracked_registers")) {
    config.tracked_registers = to_registers("tracked_registers", chain.length, *v);
    if (config.initial_register)
      for (BasisState r : config.tracked_registers)
        if (r.excitations() != config.initial_register->excitations())
          throw ParseError("tracked_registers", register_label(r) + " is not in the initial register's sector");
  }
  if (auto v = get("output_path")) config.output_path = *v;
  return config;
}

std::string format_config(const RunConfig& c) {
  std::ostringstream out;
  out << "# xxz run configuration\n";
  out << "version = " << c.version << '\n';
  if (c.mode) out << "mode = " << mode_name(*c.mode) << '\n';
  out << "L = " << c.chain.length << '\n';
  out << "J = " << format_double(c.chain.J) << '\n';
  out << "Delta = " << format_double(c.chain.Delta) << '\n';
  out << "epsilon = " << format_double(c.chain.epsilon) << '\n';
  out << "d = " << format_double(c.chain.d) << '\n';
  out << "defects = " << c.chain.defects.first << ", " << c.chain.defects.second << '\n';
  if (!c.excitations.empty()) {
    out << "N = ";
    for (std::size_t i = 0; i < c.excitations.size(); ++i) out << (i ? ", " : "") << c.excitations[i];
    out << '\n';
  }
  if (!c.delta_grid.empty()) out << "delta_grid = " << format_grid(c.delta_grid) << '\n';
  if (c.initial_register) out << "initial_register = " << register_label(*c.initial_register) << '\n';
  if (!c.t_grid.empty()) out << "t_grid = " << format_grid(c.t_grid) << '\n';
  if (!c.tracked_registers.empty()) {
    out << "tracked_registers =";
    for (BasisState r : c.tracked_registers) out << ' ' << register_label(r);
    out << '\n';
  }
  if (!c.output_path.empty()) out << "output_path = " << c.output_path << '\n';
  return out.str();
}

}  // namespace xxz
