#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qtri {

/// One verification record. `relation` is a stable machine tag naming the
/// algebraic identity being checked (e.g. "tridiagonal", "yang-baxter",
/// "bethe"); `inputs` echoes every drawn or configured scalar the check
/// depends on, and `fitted` every constant that was fitted rather than
/// assumed, so a record can be re-verified standalone.
struct CheckRecord {
    std::string name;
    std::string relation;
    std::map<std::string, std::string> inputs;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::map<std::string, std::string> fitted;
    std::string note;
};

struct Report {
    int schemaVersion = 1;
    std::string command;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;   // serialized sorted by name
    double wallTimeSeconds = 0.0;

    int passedCount() const;
    int failedCount() const;
    bool allPass() const { return failedCount() == 0; }

    /// Deterministic JSON (keys and checks sorted, fixed float format).
    std::string toJson() const;
};

/// Residual -> pass/fail shorthand.
CheckRecord makeCheck(std::string name, std::string relation, double residual,
                      double threshold);

std::string formatDouble(double v);

}  // namespace qtri
