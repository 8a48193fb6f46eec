#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "meralab/app/report.hpp"
#include "meralab/heisenberg.hpp"

namespace meralab::app {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct OptimizeOptions {
  int sites = 4;
  heisenberg::Boundary bc = heisenberg::Boundary::Periodic;
  std::string entangler = "rotation";
  std::string out;  // empty: stdout
  std::optional<double> tolerance;
};

struct EdOptions {
  int sites = 4;
  heisenberg::Boundary bc = heisenberg::Boundary::Periodic;
};

struct BetheOptions {
  int sites = 4;
  int magnons = 2;
};

struct SweepOptions {
  double theta_min = -0.25 * 3.14159265358979323846;
  double theta_max = 0.25 * 3.14159265358979323846;
  int steps = 101;
  std::string out;  // empty: stdout
};

/// Builds the full report (no I/O).
Report build_report(const OptimizeOptions& opts);

int cmd_optimize(const OptimizeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_ed(const EdOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bethe(const BetheOptions& opts, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
int cmd_wavelet(std::ostream& out, std::ostream& err);
int cmd_check(std::optional<double> tolerance, std::ostream& out, std::ostream& err);

/// CLI flag > MERA_LAB_TOLERANCE > nullopt (built-in defaults).
/// Throws std::invalid_argument for an unparsable environment value.
std::optional<double> resolve_tolerance(std::optional<double> flag);

}  // namespace meralab::app
