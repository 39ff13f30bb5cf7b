#pragma once

// Run configuration for the CLI: INI-lite text with [section] headers,
// one `key = value` per line, '#' comments, and lists as repeated keys.

#include <stdexcept>
#include <string>
#include <vector>

#include "ffmono/integrator.hpp"
#include "ffmono/phase_space.hpp"
#include "ffmono/polynomial.hpp"

namespace ffmono::cli {

// Malformed or invalid configuration; mapped to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  // [system]  term = a b re im  (repeated; none means the standard system)
  std::vector<Term> terms;
  double domain_radius = 0.3;

  // [integrator]
  IntegratorConfig integrator;

  // [scan]  shared by monodromy and the default scatter sweep
  double eps = 0.5;
  double radius = 0.25;
  int samples = 256;
  bool clockwise = false;

  // [normalize]
  int grid = 5;
  double grid_radius = 0.2;

  // [action]
  std::vector<double> flat_radii{0.2, 0.1, 0.05};
  int flat_samples = 8;
  int disk_grid = 32;

  // [scatter]  c = re im  (repeated; none means sweep the scan circle)
  std::vector<Complex> c_values;

  // [oscillator]
  std::vector<double> osc_h{0.5, 1.0, 2.0};
  std::vector<double> osc_l{0.5, 1.0, 2.0};
  double osc_horizon = 20.0;
};

// Parses and validates; throws ConfigError on any syntax or value problem.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace ffmono::cli
