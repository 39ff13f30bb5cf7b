#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "config.hpp"
#include "doctest.h"
#include "output.hpp"

#ifdef __unix__
#include <sys/wait.h>
#endif

using namespace ffmono;
using namespace ffmono::cli;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path fresh_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("ffmono_test_" + tag);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

#ifdef FFMONO_CLI_PATH
int run_cli(const std::string& args) {
  const std::string cmd = std::string(FFMONO_CLI_PATH) + " " + args +
                          " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
#ifdef __unix__
  REQUIRE(WIFEXITED(rc));
  return WEXITSTATUS(rc);
#else
  return rc;
#endif
}

std::filesystem::path write_config(const std::filesystem::path& dir,
                                   const std::string& text) {
  const auto path = dir / "run.cfg";
  std::ofstream out(path);
  out << text;
  return path;
}
#endif

}  // namespace

TEST_CASE("config parser reads sections, lists and comments") {
  const RunConfig cfg = parse_config_text(
      "# comment\n"
      "[system]\n"
      "term = 2 2 0.05 0\n"
      "term = 3 0 0 -0.2\n"
      "domain_radius = 0.4\n"
      "\n"
      "[scan]\n"
      "radius = 0.1   # trailing comment\n"
      "samples = 32\n"
      "eps = 0.4\n"
      "clockwise = true\n"
      "[action]\n"
      "flat_radius = 0.3\n"
      "flat_radius = 0.15\n"
      "[scatter]\n"
      "c = 0.05 0\n"
      "c = 0 -0.05\n");
  REQUIRE(cfg.terms.size() == 2);
  CHECK(cfg.terms[1].a == 3);
  CHECK(cfg.terms[1].coeff == Complex{0.0, -0.2});
  CHECK(cfg.domain_radius == 0.4);
  CHECK(cfg.radius == 0.1);
  CHECK(cfg.samples == 32);
  CHECK(cfg.eps == 0.4);
  CHECK(cfg.clockwise);
  REQUIRE(cfg.flat_radii.size() == 2);
  CHECK(cfg.flat_radii[0] == 0.3);
  REQUIRE(cfg.c_values.size() == 2);
  CHECK(cfg.c_values[1] == Complex{0.0, -0.05});
}

TEST_CASE("config parser rejects malformed input with line context") {
  CHECK_THROWS_WITH_AS(parse_config_text("[scan]\nbogus = 1\n"),
                       doctest::Contains("line 2"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[nosuch]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("radius = 0.1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[scan]\nradius = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[scan]\nradius = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_text("[scatter]\nc = 0 0\n"), ConfigError);
  // flat terms of total degree < 3 are a configuration error
  CHECK_THROWS_WITH_AS(parse_config_text("[system]\nterm = 1 1 0.1 0\n"),
                       doctest::Contains("(1,1)"), ConfigError);
}

TEST_CASE("doubles are rendered with 17 significant digits and roundtrip") {
  CHECK(format_double(0.25) == "0.25");
  CHECK(format_double(-0.0) == "-0");
  const double vals[] = {0.1, 1.0 / 3.0, 6.283185307179586, 1e-300,
                         123456.7890123456789};
  for (double v : vals) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("csv and json builders produce the documented shapes") {
  CsvBuilder csv({"a", "b"});
  csv.add_row({"1", "2"});
  csv.add_row({"3", "4"});
  CHECK(csv.str() == "a,b\n1,2\n3,4\n");
  CHECK_THROWS_AS(csv.add_row({"only-one"}), std::invalid_argument);

  JsonBuilder json;
  json.add_int("n", 3);
  json.add_number("x", 0.5);
  json.add_bool("ok", true);
  json.add_string("msg", "a \"b\"\nc");
  CHECK(json.str() ==
        "{\n  \"n\": 3,\n  \"x\": 0.5,\n  \"ok\": true,\n"
        "  \"msg\": \"a \\\"b\\\"\\nc\"\n}\n");
}

TEST_CASE("atomic write replaces the target in one motion") {
  const auto dir = fresh_dir("atomic");
  const auto path = dir / "out.txt";
  atomic_write(path.string(), "first");
  CHECK(slurp(path) == "first");
  atomic_write(path.string(), "second");
  CHECK(slurp(path) == "second");
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("polar plot emits a self-contained svg") {
  const std::string svg = svg_polar_plot({0.0, 1.0, 2.0}, {0.1, 0.2, 0.3},
                                         "demo");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("demo") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

#ifdef FFMONO_CLI_PATH

TEST_CASE("cli writes a scan summary whose winding matches the csv") {
  const auto dir = fresh_dir("cli_scan");
  const auto cfg = write_config(dir,
                                "[scan]\n"
                                "radius = 0.25\n"
                                "samples = 32\n"
                                "eps = 0.5\n");
  const int rc = run_cli("monodromy --config " + cfg.string() + " --out " +
                         dir.string());
  CHECK(rc == 0);

  const std::string json = slurp(dir / "monodromy_summary.json");
  CHECK(json.find("\"winding\": -1") != std::string::npos);

  // recompute the winding from the last unwrapped phase in the csv
  std::ifstream in(dir / "monodromy.csv");
  std::string line, last;
  std::getline(in, line);
  CHECK(line == "k,phi_k,c1,c2,phase_raw,phase_unwrapped");
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  const double end = std::stod(last.substr(last.rfind(',') + 1));
  CHECK(std::lround(end / (2.0 * M_PI)) == -1);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli reruns are byte-identical") {
  const auto dir = fresh_dir("cli_repeat");
  const auto cfg = write_config(dir,
                                "[scan]\n"
                                "radius = 0.25\n"
                                "samples = 24\n"
                                "eps = 0.5\n");
  const auto out1 = dir / "a", out2 = dir / "b";
  REQUIRE(run_cli("monodromy --config " + cfg.string() + " --out " +
                  out1.string()) == 0);
  REQUIRE(run_cli("monodromy --config " + cfg.string() + " --out " +
                  out2.string()) == 0);
  CHECK(slurp(out1 / "monodromy.csv") == slurp(out2 / "monodromy.csv"));
  CHECK(slurp(out1 / "monodromy_summary.json") ==
        slurp(out2 / "monodromy_summary.json"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli distinguishes configuration errors from numerical failures") {
  const auto dir = fresh_dir("cli_errors");
  // a sub-flat term is refused while reading the configuration
  const auto bad = write_config(dir, "[system]\nterm = 1 1 0.1 0\n");
  CHECK(run_cli("monodromy --config " + bad.string() + " --out " +
                dir.string()) == 2);
  // a legal configuration whose scan is too coarse fails numerically
  const auto coarse = dir / "coarse.cfg";
  {
    std::ofstream out(coarse);
    out << "[scan]\nradius = 0.25\nsamples = 8\neps = 0.5\n";
  }
  CHECK(run_cli("monodromy --config " + coarse.string() + " --out " +
                dir.string()) == 3);
  const std::string json = slurp(dir / "monodromy_summary.json");
  CHECK(json.find("\"error\"") != std::string::npos);
  CHECK(json.find("\"failing_index\"") != std::string::npos);
  // missing configuration file
  CHECK(run_cli("monodromy --config " + (dir / "nope.cfg").string() +
                " --out " + dir.string()) == 2);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cli scatter honors explicit fibers and the svg flag") {
  const auto dir = fresh_dir("cli_scatter");
  const auto cfg = write_config(dir,
                                "[scan]\neps = 0.5\n"
                                "[scatter]\nc = 0.05 0\nc = 0 0.05\n");
  REQUIRE(run_cli("scatter --config " + cfg.string() + " --out " +
                  dir.string() + " --svg") == 0);
  CHECK(slurp(dir / "scatter_summary.json").find("\"samples\": 2") !=
        std::string::npos);
  CHECK(slurp(dir / "scatter.svg").rfind("<svg", 0) == 0);
  std::ifstream in(dir / "scatter.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "k,c1,c2,phase,elapsed,deviation");
  std::filesystem::remove_all(dir);
}

#endif  // FFMONO_CLI_PATH
