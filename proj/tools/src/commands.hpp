#pragma once

#include <iosfwd>

#include "run_config.hpp"

namespace ifam::cli {

/// Executes one subcommand.  Data goes to `out` (or the configured output
/// path); diagnostics go to `err`.  Returns 0 on success, 2 on a usage
/// error, 1 on a runtime error.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ifam::cli
