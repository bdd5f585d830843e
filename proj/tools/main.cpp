#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtri/commands.hpp"

namespace {

struct CliState {
    std::string configPath;
    std::vector<std::string> sets;
    std::optional<std::uint64_t> seed;
    std::string outPath;
    std::vector<std::string> suites;
};

void addCommonOptions(CLI::App* cmd, CliState& state, bool withSuites) {
    cmd->add_option("--config", state.configPath, "key=value configuration file")
        ->check(CLI::ExistingFile);
    cmd->add_option("--set", state.sets,
                    "override one configuration entry (key=value, repeatable)");
    cmd->add_option("--seed", state.seed, "seed for all randomized checks");
    cmd->add_option("--out", state.outPath, "write the JSON report here instead of stdout");
    if (withSuites)
        cmd->add_option("--suite", state.suites,
                        "run only the named suites (repeatable or comma-separated)");
}

qtri::RunConfig buildConfig(const CliState& state) {
    qtri::RunConfig cfg;
    if (!state.configPath.empty()) cfg = qtri::parseConfigFile(state.configPath);
    bool sawS = false;
    bool sawQ = false;
    for (const std::string& entry : state.sets) {
        auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw qtri::ConfigError("--set expects key=value, got '" + entry + "'");
        qtri::applyConfigEntry(cfg, entry.substr(0, eq), entry.substr(eq + 1), sawS, sawQ);
    }
    if (state.seed) cfg.seed = *state.seed;
    if (!state.outPath.empty()) cfg.outPath = state.outPath;
    if (!state.suites.empty()) {
        std::string joined;
        for (const std::string& name : state.suites) {
            if (!joined.empty()) joined += ",";
            joined += name;
        }
        bool s2 = false;
        bool q2 = false;
        qtri::applyConfigEntry(cfg, "suite", joined, s2, q2);
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical certification of a q-deformed tridiagonal integrable structure"};
    app.require_subcommand(1);

    CliState state;
    CLI::App* verify =
        app.add_subcommand("verify", "run the identity-check suites and report pass/fail");
    addCommonOptions(verify, state, true);
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "solve the one-site spectral problem and certify its root systems");
    addCommonOptions(spectrum, state, false);
    CLI::App* onsager = app.add_subcommand(
        "onsager", "check the undeformed double-commutator relations and recursion");
    addCommonOptions(onsager, state, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? qtri::kExitPass : qtri::kExitUsage;
    }

    try {
        qtri::RunConfig cfg = buildConfig(state);
        qtri::CommandResult result;
        if (verify->parsed()) {
            result = qtri::cmdVerify(cfg);
        } else if (spectrum->parsed()) {
            result = qtri::cmdSpectrum(cfg);
        } else {
            result = qtri::cmdOnsager(cfg);
        }
        qtri::emitReport(result.report, cfg);
        std::cerr << result.report.command << ": " << result.report.passedCount() << "/"
                  << (result.report.passedCount() + result.report.failedCount())
                  << " checks passed in " << qtri::formatDouble(result.report.wallTimeSeconds)
                  << " s\n";
        return result.exitCode;
    } catch (const qtri::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return qtri::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return qtri::kExitCheckFailure;
    }
}
