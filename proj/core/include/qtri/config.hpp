#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtri/affine.hpp"

namespace qtri {

/// Exit-code contract shared by the command layer and the CLI.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

/// Thrown on malformed configuration; the message names the offending key.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Run configuration. Populated from a flat key=value file plus command-line
/// overrides; every random draw downstream is derived from `seed`.
///
/// Recognized keys:
///   s | q            deformation parameter as a complex literal "a+bi"
///                    (specifying both is an error)
///   c0, kappa, kappa_star, epsilon_plus, epsilon_minus, k, t   complex
///   j                half-integer spin: "1/2", "1", "3/2", ...
///   N                chain length (positive integer)
///   sites            inhomogeneous chain "j@v;j@v;..." (overrides j/N/k)
///   rho_override     complex; forces a wrong structure constant
///                    (negative-control bookkeeping)
///   tol_id, tol_eig  real tolerances
///   seed             unsigned integer
///   suite            comma-separated suite names (default: all)
///   out              report output path
struct RunConfig {
    Params params;
    int twoJ = 1;
    int chainLength = 2;
    Cplx k{1.07, 0.21};
    std::optional<ChainSpec> explicitSites;
    Cplx epsPlus{0.6, 0.2};
    Cplx epsMinus{0.8, -0.5};
    Cplx t{1.7, 0.0};
    std::optional<Cplx> rhoOverride;
    std::uint64_t seed = 7;
    std::vector<std::string> suites;  // empty = all
    std::string outPath;

    /// Homogeneous chain of `chainLength` sites with v = k·q^{1/4}
    /// (or the explicit site list when one was configured).
    ChainSpec chain() const;
};

/// Parse a complex literal: "1.2", "-0.3i", "1.2+0.3i", "1.2-0.3i".
Cplx parseCplx(const std::string& text, const std::string& key);

/// Parse a half-integer: "1/2" -> 1, "1" -> 2, "3/2" -> 3 (returns twoJ).
int parseHalfInteger(const std::string& text, const std::string& key);

/// Parse a flat key=value config file ('#' comments, blank lines ignored).
/// Unknown keys throw ConfigError naming the key; so does giving both q and s.
RunConfig parseConfigFile(const std::string& path);

/// Apply one key=value assignment (also used for CLI overrides).
void applyConfigEntry(RunConfig& cfg, const std::string& key, const std::string& value,
                      bool& sawS, bool& sawQ);

/// Names of all verification suites, in canonical order.
const std::vector<std::string>& allSuiteNames();

}  // namespace qtri
