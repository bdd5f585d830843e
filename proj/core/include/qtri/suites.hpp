#pragma once

#include <string>
#include <vector>

#include "qtri/config.hpp"
#include "qtri/report.hpp"

namespace qtri {

/// Each suite runs a family of identity checks and returns one CheckRecord per
/// verified relation. Random inputs are drawn from `rng` (seeded by the caller)
/// and logged into each record's `inputs` map so runs are reproducible.
std::vector<CheckRecord> suiteRepresentation(const RunConfig& cfg, Rng& rng);
std::vector<CheckRecord> suiteTridiagonal(const RunConfig& cfg, Rng& rng);
std::vector<CheckRecord> suiteQuadratic(const RunConfig& cfg, Rng& rng);
std::vector<CheckRecord> suiteInvolution(const RunConfig& cfg, Rng& rng);
std::vector<CheckRecord> suiteReflection(const RunConfig& cfg, Rng& rng);
std::vector<CheckRecord> suiteTransfer(const RunConfig& cfg, Rng& rng);
std::vector<CheckRecord> suiteAsymptotic(const RunConfig& cfg, Rng& rng);
std::vector<CheckRecord> suiteSpectral(const RunConfig& cfg, Rng& rng);
std::vector<CheckRecord> suiteOrthogonal(const RunConfig& cfg, Rng& rng);
std::vector<CheckRecord> suiteClassical(const RunConfig& cfg, Rng& rng);

/// Run the named suite ("representation", "tridiagonal", "quadratic",
/// "involution", "reflection", "transfer", "asymptotic", "spectral",
/// "orthogonal", "classical"). Throws ConfigError for unknown names.
std::vector<CheckRecord> runSuite(const std::string& name, const RunConfig& cfg, Rng& rng);

}  // namespace qtri
