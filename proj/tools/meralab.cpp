#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "meralab/app/commands.hpp"

using namespace meralab;

namespace {

std::optional<heisenberg::Boundary> parse_boundary(const std::string& s) {
  if (s == "open") return heisenberg::Boundary::Open;
  if (s == "periodic") return heisenberg::Boundary::Periodic;
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MERA circuit optimizer for the 4-site Heisenberg ring"};
  app.require_subcommand(1);

  std::optional<double> tolerance;
  app.add_option("--tolerance", tolerance, "override every check tolerance");

  int sites = 4;
  std::string bc = "periodic";
  std::string entangler = "rotation";
  std::string out;

  auto* optimize = app.add_subcommand("optimize", "optimize the entangler and write the JSON report");
  optimize->add_option("--sites", sites);
  optimize->add_option("--bc", bc)->check(CLI::IsMember({"open", "periodic"}));
  optimize->add_option("--entangler", entangler)->check(CLI::IsMember({"rotation", "rmatrix"}));
  optimize->add_option("--out", out, "report path (stdout if omitted)");
  optimize->add_option("--tolerance", tolerance);

  auto* ed = app.add_subcommand("ed", "exact diagonalization by magnetization sector");
  ed->add_option("--sites", sites);
  ed->add_option("--bc", bc)->check(CLI::IsMember({"open", "periodic"}));

  int magnons = 2;
  auto* bethe = app.add_subcommand("bethe", "solve the Bethe equations");
  bethe->add_option("--sites", sites);
  bethe->add_option("--magnons", magnons);

  app::SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "energy landscape over theta as CSV");
  sweep->add_option("--theta-min", sweep_opts.theta_min);
  sweep->add_option("--theta-max", sweep_opts.theta_max);
  sweep->add_option("--steps", sweep_opts.steps);
  sweep->add_option("--out", sweep_opts.out, "CSV path (stdout if omitted)");

  auto* wavelet = app.add_subcommand("wavelet", "D4 taps and angle comparisons");

  auto* check = app.add_subcommand("check", "run the invariant suite");
  check->add_option("--tolerance", tolerance);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : app::kExitUsage;
  }

  std::optional<double> tol;
  try {
    tol = app::resolve_tolerance(tolerance);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return app::kExitUsage;
  }
  const auto boundary = parse_boundary(bc);

  if (optimize->parsed())
    return app::cmd_optimize({sites, *boundary, entangler, out, tol}, std::cout, std::cerr);
  if (ed->parsed()) return app::cmd_ed({sites, *boundary}, std::cout, std::cerr);
  if (bethe->parsed()) return app::cmd_bethe({sites, magnons}, std::cout, std::cerr);
  if (sweep->parsed()) return app::cmd_sweep(sweep_opts, std::cout, std::cerr);
  if (wavelet->parsed()) return app::cmd_wavelet(std::cout, std::cerr);
  if (check->parsed()) return app::cmd_check(tol, std::cout, std::cerr);
  return app::kExitUsage;
}
