#pragma once

#include "qtri/config.hpp"
#include "qtri/report.hpp"

namespace qtri {

struct CommandResult {
    Report report;
    int exitCode = kExitPass;
};

/// Run the configured verification suites (all by default).
CommandResult cmdVerify(const RunConfig& cfg);

/// Solve the one-site spectral problem: eigenfunctions, roots, root-system
/// residuals, eigenvalue formula, and the duality transformation.
CommandResult cmdSpectrum(const RunConfig& cfg);

/// Undeformed branch: polynomial realization of the pair of generators with
/// the quartic relations, plus the recursion built from repeated commutators.
CommandResult cmdOnsager(const RunConfig& cfg);

/// Serialize the report to cfg.outPath if set, else to stdout.
void emitReport(const Report& report, const RunConfig& cfg);

}  // namespace qtri
