#include "config.hpp"

#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>

namespace ffmono::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

double parse_double(const std::string& tok, const std::string& where) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size() || !std::isfinite(v))
      throw ConfigError("invalid number '" + tok + "' for " + where);
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("invalid number '" + tok + "' for " + where);
  }
}

long long parse_int(const std::string& tok, const std::string& where) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size())
      throw ConfigError("invalid integer '" + tok + "' for " + where);
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    throw ConfigError("invalid integer '" + tok + "' for " + where);
  }
}

bool parse_bool(const std::string& tok, const std::string& where) {
  if (tok == "true" || tok == "1") return true;
  if (tok == "false" || tok == "0") return false;
  throw ConfigError("invalid boolean '" + tok + "' for " + where +
                    " (use true/false)");
}

double expect_one_double(const std::vector<std::string>& fields,
                         const std::string& where) {
  if (fields.size() != 1)
    throw ConfigError(where + " expects a single value");
  return parse_double(fields[0], where);
}

long long expect_one_int(const std::vector<std::string>& fields,
                         const std::string& where) {
  if (fields.size() != 1)
    throw ConfigError(where + " expects a single value");
  return parse_int(fields[0], where);
}

void require_positive(double v, const std::string& where) {
  if (!(v > 0.0))
    throw ConfigError(where + " must be positive (got " + std::to_string(v) +
                      ")");
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  RunConfig cfg;
  bool radii_reset = false, h_reset = false, l_reset = false;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "system" && section != "integrator" &&
          section != "scan" && section != "normalize" &&
          section != "action" && section != "scatter" &&
          section != "oscillator")
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unknown section [" + section + "]");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::vector<std::string> fields =
        split_fields(trim(line.substr(eq + 1)));
    const std::string where = "[" + section + "] " + key;
    if (key.empty() || fields.empty())
      throw ConfigError("line " + std::to_string(lineno) +
                        ": empty key or value");

    if (section == "system") {
      if (key == "term") {
        if (fields.size() != 4)
          throw ConfigError(where + " expects: a b re im");
        Term t;
        t.a = static_cast<int>(parse_int(fields[0], where));
        t.b = static_cast<int>(parse_int(fields[1], where));
        t.coeff = Complex{parse_double(fields[2], where),
                          parse_double(fields[3], where)};
        cfg.terms.push_back(t);
      } else if (key == "domain_radius") {
        cfg.domain_radius = expect_one_double(fields, where);
      } else {
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unknown key '" + key + "' in section [system]");
      }
    } else if (section == "integrator") {
      if (key == "rel_tol")
        cfg.integrator.rel_tol = expect_one_double(fields, where);
      else if (key == "abs_tol")
        cfg.integrator.abs_tol = expect_one_double(fields, where);
      else if (key == "initial_step")
        cfg.integrator.initial_step = expect_one_double(fields, where);
      else if (key == "max_steps")
        cfg.integrator.max_steps = expect_one_int(fields, where);
      else
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unknown key '" + key + "' in section [integrator]");
    } else if (section == "scan") {
      if (key == "eps")
        cfg.eps = expect_one_double(fields, where);
      else if (key == "radius")
        cfg.radius = expect_one_double(fields, where);
      else if (key == "samples")
        cfg.samples = static_cast<int>(expect_one_int(fields, where));
      else if (key == "clockwise")
        cfg.clockwise = parse_bool(fields.size() == 1 ? fields[0] : "", where);
      else
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unknown key '" + key + "' in section [scan]");
    } else if (section == "normalize") {
      if (key == "grid")
        cfg.grid = static_cast<int>(expect_one_int(fields, where));
      else if (key == "grid_radius")
        cfg.grid_radius = expect_one_double(fields, where);
      else
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unknown key '" + key + "' in section [normalize]");
    } else if (section == "action") {
      if (key == "flat_radius") {
        if (!radii_reset) {
          cfg.flat_radii.clear();
          radii_reset = true;
        }
        cfg.flat_radii.push_back(expect_one_double(fields, where));
      } else if (key == "flat_samples") {
        cfg.flat_samples = static_cast<int>(expect_one_int(fields, where));
      } else if (key == "disk_grid") {
        cfg.disk_grid = static_cast<int>(expect_one_int(fields, where));
      } else {
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unknown key '" + key + "' in section [action]");
      }
    } else if (section == "scatter") {
      if (key == "c") {
        if (fields.size() != 2) throw ConfigError(where + " expects: re im");
        cfg.c_values.emplace_back(parse_double(fields[0], where),
                                  parse_double(fields[1], where));
      } else {
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unknown key '" + key + "' in section [scatter]");
      }
    } else if (section == "oscillator") {
      if (key == "h") {
        if (!h_reset) {
          cfg.osc_h.clear();
          h_reset = true;
        }
        cfg.osc_h.push_back(expect_one_double(fields, where));
      } else if (key == "l") {
        if (!l_reset) {
          cfg.osc_l.clear();
          l_reset = true;
        }
        cfg.osc_l.push_back(expect_one_double(fields, where));
      } else if (key == "horizon") {
        cfg.osc_horizon = expect_one_double(fields, where);
      } else {
        throw ConfigError("line " + std::to_string(lineno) +
                          ": unknown key '" + key + "' in section [oscillator]");
      }
    } else {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": key outside of any section");
    }
  }

  // Value validation: everything rejected here is a config error (exit 2);
  // looser library preconditions (e.g. the n >= 16 unwrap requirement) stay
  // with the computation and surface as numerical errors instead.
  require_positive(cfg.domain_radius, "[system] domain_radius");
  try {
    cfg.integrator.validate();
    (void)FlatPolynomial(cfg.terms);  // degree >= 3, finite, unique keys
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  require_positive(cfg.eps, "[scan] eps");
  require_positive(cfg.radius, "[scan] radius");
  if (cfg.samples < 1) throw ConfigError("[scan] samples must be >= 1");
  if (cfg.grid < 1) throw ConfigError("[normalize] grid must be >= 1");
  require_positive(cfg.grid_radius, "[normalize] grid_radius");
  if (cfg.flat_radii.empty())
    throw ConfigError("[action] needs at least one flat_radius");
  for (double rho : cfg.flat_radii)
    require_positive(rho, "[action] flat_radius");
  if (cfg.flat_samples < 1)
    throw ConfigError("[action] flat_samples must be >= 1");
  if (cfg.disk_grid < 1) throw ConfigError("[action] disk_grid must be >= 1");
  for (const Complex& c : cfg.c_values)
    if (!(std::abs(c) > 0.0))
      throw ConfigError("[scatter] c must be nonzero");
  if (cfg.osc_h.empty() || cfg.osc_l.empty())
    throw ConfigError("[oscillator] needs at least one h and one l");
  require_positive(cfg.osc_horizon, "[oscillator] horizon");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace ffmono::cli
