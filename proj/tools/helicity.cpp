// helicity: command-line verification harness.
//
//   helicity verify <suite> [--grid-theta N] [--grid-phi N] [--delta-phi-samples N]
//                           [--seed S] [--tolerance T] [--format json|csv] [--out PATH]
//   helicity compute --spinor "a,b,c,d" [--format json|text]
//
// Exit status: 0 all cases pass, 1 some residual exceeds tolerance,
// 2 configuration or parse error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "helicity/cli.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit(const std::string& text, const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << *path << "' for writing\n";
    return kExitUsage;
  }
  out << text;
  if (!out.flush()) {
    std::cerr << "error: write to '" << *path << "' failed\n";
    return kExitUsage;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace helicity::cli;

  CLI::App app{"Helicity verification harness for Clifford-algebra spinor identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  RunConfig cfg;
  std::string suite_name;
  std::string format_name = "json";
  std::string out_path;

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite_name, "clifford | bilinears | theorem | graphene | all")
      ->required();
  verify->add_option("--grid-theta", cfg.grid_theta, "Polar grid points (inclusive of poles)");
  verify->add_option("--grid-phi", cfg.grid_phi, "Azimuthal grid points on [0, 2pi)");
  verify->add_option("--delta-phi-samples", cfg.delta_phi_samples, "Phase offsets on [0, 2pi)");
  verify->add_option("--seed", cfg.seed, "Seed for random spinors and wavevectors");
  verify->add_option("--tolerance", cfg.tolerance, "Pass/fail residual tolerance");
  verify->add_option("--format", format_name, "json | csv");
  verify->add_option("--out", out_path, "Write the report here instead of stdout");

  std::string spinor_text;
  std::string compute_format = "text";
  auto* compute = app.add_subcommand("compute", "Bilinear covariants and helicity of one spinor");
  compute->add_option("--spinor", spinor_text, "Four complex components, e.g. \"1,0,0.5i,0\"")
      ->required();
  compute->add_option("--format", compute_format, "text | json");
  compute->add_option("--tolerance", cfg.tolerance, "Acceptance tolerance for K = hJ");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      cfg.suite = parse_suite(suite_name);
      cfg.format = parse_format(format_name);
      if (!out_path.empty()) cfg.output_path = out_path;
      cfg.validate();
      const auto report = run_suite(cfg);
      if (const int rc = emit(render(report, cfg.format), cfg.output_path); rc != 0) return rc;
      return report.all_passed() ? 0 : kExitFail;
    }

    if (compute_format != "text" && compute_format != "json") {
      throw std::invalid_argument("unknown format '" + compute_format + "'");
    }
    cfg.validate();
    const auto report = compute_command(spinor_text, cfg);
    std::cout << (compute_format == "json" ? to_json(report).dump(2) + "\n"
                                           : render_compute_text(report));
    return report.all_passed() ? 0 : kExitFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
