#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>

#include "ffmono/action.hpp"
#include "ffmono/dynamics.hpp"
#include "ffmono/errors.hpp"
#include "ffmono/normal_form.hpp"
#include "ffmono/scattering.hpp"
#include "output.hpp"

namespace ffmono::cli {
namespace {

struct System {
  PerturbedSystem sys;
  NormalizingMap nm;
};

System build_system(const RunConfig& cfg) {
  FlatPolynomial R(cfg.terms);
  PerturbedSystem sys(R);
  NormalizingMap nm = normalize(R, cfg.domain_radius, cfg.integrator);
  return {std::move(sys), std::move(nm)};
}

void write_error(const std::string& out_dir, const std::string& name,
                 const std::string& message, int failing_index) {
  JsonBuilder json;
  json.add_string("error", message);
  json.add_int("failing_index", failing_index);
  atomic_write(out_dir + "/" + name + "_summary.json", json.str());
  std::fprintf(stderr, "%s: %s\n", name.c_str(), message.c_str());
}

// Runs the command body, mapping library failures to exit code 3 with the
// error recorded in the summary JSON.
int guarded(const std::string& out_dir, const std::string& name,
            const std::function<void()>& body) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::fprintf(stderr, "%s: cannot create output directory %s\n",
                 name.c_str(), out_dir.c_str());
    return 3;
  }
  try {
    body();
    return 0;
  } catch (const NumericalError& e) {
    write_error(out_dir, name, e.what(), e.sample_index);
    return 3;
  } catch (const Error& e) {
    write_error(out_dir, name, e.what(), -1);
    return 3;
  } catch (const std::invalid_argument& e) {
    write_error(out_dir, name, e.what(), -1);
    return 3;
  }
}

}  // namespace

int cmd_monodromy(const RunConfig& cfg, const std::string& out_dir) {
  return guarded(out_dir, "monodromy", [&] {
    const System s = build_system(cfg);
    const MonodromyResult res =
        monodromy_scan(s.sys, s.nm, cfg.radius, cfg.samples, cfg.eps,
                       cfg.integrator, cfg.clockwise);

    CsvBuilder csv({"k", "phi_k", "c1", "c2", "phase_raw", "phase_unwrapped"});
    const double orient = cfg.clockwise ? -1.0 : 1.0;
    for (int k = 0; k <= res.samples; ++k) {
      const double phi = orient * 2.0 * M_PI * k / res.samples;
      csv.add_row({std::to_string(k), format_double(phi),
                   format_double(cfg.radius * std::cos(phi)),
                   format_double(cfg.radius * std::sin(phi)),
                   format_double(res.phases_raw[static_cast<std::size_t>(k)]),
                   format_double(res.phases[static_cast<std::size_t>(k)])});
    }
    atomic_write(out_dir + "/monodromy.csv", csv.str());

    JsonBuilder json;
    json.add_number("radius", res.radius);
    json.add_int("samples", res.samples);
    json.add_int("winding", res.winding);
    json.add_number("max_unwrap_jump", res.max_unwrap_jump);
    atomic_write(out_dir + "/monodromy_summary.json", json.str());
  });
}

int cmd_normalize(const RunConfig& cfg, const std::string& out_dir) {
  return guarded(out_dir, "normalize", [&] {
    const System s = build_system(cfg);
    // Product grid over the chart components inside the polydisk of the
    // requested radius (each component bounded by grid_radius / sqrt 2).
    const int g = cfg.grid;
    const double a = cfg.grid_radius / std::sqrt(2.0);
    auto coord = [&](int i) {
      return g == 1 ? 0.0 : -a + 2.0 * a * i / (g - 1);
    };

    CsvBuilder csv({"i", "z1_re", "z1_im", "z2_re", "z2_im", "residual",
                    "roundtrip"});
    double max_res = 0.0, max_rt = 0.0;
    long long idx = 0;
    for (int i0 = 0; i0 < g; ++i0)
      for (int i1 = 0; i1 < g; ++i1)
        for (int i2 = 0; i2 < g; ++i2)
          for (int i3 = 0; i3 < g; ++i3) {
            const ComplexPair z{Complex{coord(i0), coord(i1)},
                                Complex{coord(i2), coord(i3)}};
            const ComplexPair w = s.nm.forward(z);
            const double res =
                std::abs(s.sys.hamiltonian(w) - z.z1 * z.z2);
            const ComplexPair back = s.nm.inverse(w);
            const double rt = std::hypot(std::abs(back.z1 - z.z1),
                                         std::abs(back.z2 - z.z2));
            max_res = std::max(max_res, res);
            max_rt = std::max(max_rt, rt);
            csv.add_row({std::to_string(idx++), format_double(z.z1.real()),
                         format_double(z.z1.imag()),
                         format_double(z.z2.real()),
                         format_double(z.z2.imag()), format_double(res),
                         format_double(rt)});
          }
    atomic_write(out_dir + "/normalize.csv", csv.str());

    JsonBuilder json;
    json.add_int("grid", g);
    json.add_number("grid_radius", cfg.grid_radius);
    json.add_number("domain_radius", cfg.domain_radius);
    json.add_number("certified_radius", s.nm.certified_radius());
    json.add_number("max_residual", max_res);
    json.add_number("max_roundtrip", max_rt);
    atomic_write(out_dir + "/normalize_summary.json", json.str());
  });
}

int cmd_action(const RunConfig& cfg, const std::string& out_dir,
               std::uint64_t seed) {
  return guarded(out_dir, "action", [&] {
    const System s = build_system(cfg);
    const std::vector<double> profile = flatness_profile(
        s.sys, s.nm, cfg.flat_radii, cfg.flat_samples, seed);

    CsvBuilder csv({"rho", "sup_ratio", "loop_disk_gap"});
    double max_ratio = 0.0, max_gap = 0.0;
    bool decreasing = true;
    for (std::size_t i = 0; i < cfg.flat_radii.size(); ++i) {
      const double rho = cfg.flat_radii[i];
      // Loop/disk consistency probe at a fixed point of the sphere |w| = rho.
      const double u = rho / std::sqrt(2.0);
      const PhasePoint w{u, 0.0, 0.0, u};
      const double loop = loop_action(s.sys, s.nm, w, cfg.integrator);
      const PhasePoint z = s.nm.inverse(w);
      const double disk = disk_action(s.sys, s.nm, z, cfg.disk_grid);
      const double gap = std::abs(loop - disk);
      max_gap = std::max(max_gap, gap);
      max_ratio = std::max(max_ratio, profile[i]);
      if (i > 0 && !(profile[i] < profile[i - 1])) decreasing = false;
      csv.add_row({format_double(rho), format_double(profile[i]),
                   format_double(gap)});
    }
    atomic_write(out_dir + "/action.csv", csv.str());

    JsonBuilder json;
    json.add_int("samples", cfg.flat_samples);
    json.add_int("seed", static_cast<long long>(seed));
    json.add_bool("strictly_decreasing", decreasing);
    json.add_number("max_sup_ratio", max_ratio);
    json.add_number("max_loop_disk_gap", max_gap);
    atomic_write(out_dir + "/action_summary.json", json.str());
  });
}

int cmd_scatter(const RunConfig& cfg, const std::string& out_dir, bool svg) {
  return guarded(out_dir, "scatter", [&] {
    const System s = build_system(cfg);
    std::vector<Complex> cs = cfg.c_values;
    const bool swept = cs.empty();
    if (swept) {
      const double orient = cfg.clockwise ? -1.0 : 1.0;
      for (int k = 0; k <= cfg.samples; ++k) {
        const double phi = orient * 2.0 * M_PI * k / cfg.samples;
        cs.push_back(std::polar(cfg.radius, phi));
      }
    }

    CsvBuilder csv({"k", "c1", "c2", "phase", "elapsed", "deviation"});
    std::vector<double> angles, phases;
    double max_dev = 0.0;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      ScatteringRecord rec;
      try {
        rec = scattering_phase(s.sys, s.nm,
                               EnergyMomentum{cs[k].real(), cs[k].imag()},
                               cfg.eps, cfg.integrator);
      } catch (NumericalError& e) {
        e.sample_index = static_cast<int>(k);
        throw;
      } catch (const DomainError& e) {
        throw NumericalError(NumericalError::Kind::domain_exit,
                             "sample " + std::to_string(k) + ": " + e.what(),
                             static_cast<int>(k));
      }
      // Deviation from the closed-form standard phase on the same fiber.
      const double dev = std::abs(
          std::remainder(rec.phase + std::arg(cs[k]), 2.0 * M_PI));
      max_dev = std::max(max_dev, dev);
      angles.push_back(std::arg(cs[k]));
      phases.push_back(rec.phase);
      csv.add_row({std::to_string(k), format_double(cs[k].real()),
                   format_double(cs[k].imag()), format_double(rec.phase),
                   format_double(rec.transit_tau.real()),
                   format_double(dev)});
    }
    atomic_write(out_dir + "/scatter.csv", csv.str());

    JsonBuilder json;
    json.add_int("samples", static_cast<long long>(cs.size()));
    json.add_number("eps", cfg.eps);
    json.add_bool("swept_circle", swept);
    json.add_number("radius", swept ? cfg.radius : 0.0);
    json.add_number("max_deviation", max_dev);
    atomic_write(out_dir + "/scatter_summary.json", json.str());

    if (svg)
      atomic_write(out_dir + "/scatter.svg",
                   svg_polar_plot(angles, phases,
                                  "scattering phase vs loop angle"));
  });
}

int cmd_oscillator(const RunConfig& cfg, const std::string& out_dir) {
  return guarded(out_dir, "oscillator", [&] {
    CsvBuilder csv({"h", "l", "deflection", "reference", "abs_error"});
    double max_err = 0.0;
    long long count = 0;
    for (double h : cfg.osc_h)
      for (double l : cfg.osc_l) {
        const double d =
            oscillator_deflection(h, l, cfg.osc_horizon, cfg.integrator);
        const double ref = std::atan2(h, l);
        const double err = std::abs(d - ref);
        max_err = std::max(max_err, err);
        ++count;
        csv.add_row({format_double(h), format_double(l), format_double(d),
                     format_double(ref), format_double(err)});
      }
    atomic_write(out_dir + "/oscillator.csv", csv.str());

    JsonBuilder json;
    json.add_int("count", count);
    json.add_number("horizon", cfg.osc_horizon);
    json.add_number("max_abs_error", max_err);
    atomic_write(out_dir + "/oscillator_summary.json", json.str());
  });
}

}  // namespace ffmono::cli
