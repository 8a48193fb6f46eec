#pragma once

#include <optional>
#include <vector>

#include "meralab/app/report.hpp"

namespace meralab::app {

/// The invariant suite behind `meralab check`. Every asserted check carries
/// its own default tolerance; `tolerance_override` replaces all of them.
std::vector<CheckResult> run_checks(std::optional<double> tolerance_override = std::nullopt);

bool all_passed(const std::vector<CheckResult>& checks);

/// The Sz = 0 block of the 4-site periodic Hamiltonian as printed in the
/// reference (basis 0011, 0101, 0110, 1001, 1010, 1100).
ComplexMatrix reference_sector_block();

}  // namespace meralab::app
