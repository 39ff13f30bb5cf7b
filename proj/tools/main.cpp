#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"focus-focus monodromy toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  bool svg = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "run configuration file")
        ->required();
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "seed for randomized sweeps");
  };

  CLI::App* c_monodromy = app.add_subcommand(
      "monodromy", "sweep a loop of regular values and certify the winding");
  add_common(c_monodromy);

  CLI::App* c_normalize = app.add_subcommand(
      "normalize", "residuals of the normalizing map on a chart grid");
  add_common(c_normalize);

  CLI::App* c_action = app.add_subcommand(
      "action", "flatness profile of the loop action and Stokes check");
  add_common(c_action);

  CLI::App* c_scatter = app.add_subcommand(
      "scatter", "per-fiber scattering phases across a value sweep");
  add_common(c_scatter);
  c_scatter->add_flag("--svg", svg, "also write a polar plot");

  CLI::App* c_oscillator = app.add_subcommand(
      "oscillator", "hyperbolic-oscillator deflection against atan2(h, l)");
  add_common(c_oscillator);

  CLI11_PARSE(app, argc, argv);

  ffmono::cli::RunConfig cfg;
  try {
    cfg = ffmono::cli::load_config(config_path);
  } catch (const ffmono::cli::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }

  if (c_monodromy->parsed()) return ffmono::cli::cmd_monodromy(cfg, out_dir);
  if (c_normalize->parsed()) return ffmono::cli::cmd_normalize(cfg, out_dir);
  if (c_action->parsed()) return ffmono::cli::cmd_action(cfg, out_dir, seed);
  if (c_scatter->parsed()) return ffmono::cli::cmd_scatter(cfg, out_dir, svg);
  if (c_oscillator->parsed()) return ffmono::cli::cmd_oscillator(cfg, out_dir);
  return 2;
}
