#pragma once

#include <iosfwd>
#include <string>

#include "ncosc/config.hpp"

namespace ncosc {

// Executes one subcommand ("expand" | "spectrum" | "pt" | "verify" | "sweep")
// against a finalized config. Rendered output goes to cfg.out_path (atomic
// write) when set, otherwise to `out`; human diagnostics go to `diag`.
// Returns the process exit code: 0 on success, 2 when `verify` finds
// engine-vs-engine invariant violations. Throws Error subtypes otherwise.
int run_subcommand(const std::string& subcommand, const RunConfig& cfg, std::ostream& out,
                   std::ostream& diag);

}  // namespace ncosc
