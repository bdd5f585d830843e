#include "qtri/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "qtri/spectra.hpp"
#include "qtri/suites.hpp"

namespace qtri {

namespace {

/// FNV-1a, so each suite owns a seed stream independent of the order and
/// selection of suites in the run (std::hash is not stable across builds).
std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

double elapsedSeconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int exitFor(const Report& report) {
    return report.allPass() ? kExitPass : kExitCheckFailure;
}

}  // namespace

CommandResult cmdVerify(const RunConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    cfg.params.validate();

    std::vector<std::string> names = cfg.suites.empty() ? allSuiteNames() : cfg.suites;
    Report report;
    report.command = "verify";
    report.seed = cfg.seed;
    for (const std::string& name : names) {
        Rng rng(fnv1a(name) ^ cfg.seed);
        std::vector<CheckRecord> records = runSuite(name, cfg, rng);
        report.checks.insert(report.checks.end(), std::make_move_iterator(records.begin()),
                             std::make_move_iterator(records.end()));
    }
    report.wallTimeSeconds = elapsedSeconds(start);
    int code = exitFor(report);
    return CommandResult{std::move(report), code};
}

CommandResult cmdSpectrum(const RunConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    const Params& p = cfg.params;
    p.validate();

    int twoJ = cfg.twoJ;
    Cplx v = cfg.k * p.qq(1);
    if (cfg.explicitSites) {
        if (cfg.explicitSites->size() != 1)
            throw ConfigError("the spectrum command works on a single site; configure one "
                              "entry in 'sites' or use 'j'");
        twoJ = cfg.explicitSites->sites[0].twoJ;
        v = cfg.explicitSites->sites[0].v;
    }

    Report report;
    report.command = "spectrum";
    report.seed = cfg.seed;

    ChainSpec chain;
    chain.sites = {Site{twoJ, v}};
    TDPair pair = buildTDPair(chain, p);
    ChargeSet charges = buildCharges(pair);
    DifferenceOperator op = buildDifferenceOperator(twoJ, v, p);

    CheckRecord entry =
        makeCheck("spectrum/charge-match", "difference-operator",
                  relResidual(Operator(charges.I1.dims, op.m), charges.I1), p.tolId);
    entry.inputs["v"] = formatCplx(v);
    entry.inputs["j"] = twoJ % 2 == 0 ? std::to_string(twoJ / 2)
                                      : std::to_string(twoJ) + "/2";
    report.checks.push_back(std::move(entry));

    std::vector<Solution> sols = solveSpectrum(op);
    int defects = static_cast<int>(sols.size()) != twoJ + 1;
    for (const Solution& sol : sols)
        if (sol.degenerate || static_cast<int>(sol.roots.size()) != twoJ) ++defects;
    CheckRecord complete = makeCheck("spectrum/completeness", "spectral-completeness",
                                     static_cast<double>(defects), 0.5);
    complete.note = std::to_string(sols.size()) + " eigenfunctions found, " +
                    std::to_string(twoJ + 1) + " expected with " + std::to_string(twoJ) +
                    " roots each";
    report.checks.push_back(std::move(complete));

    for (std::size_t i = 0; i < sols.size(); ++i) {
        const Solution& sol = sols[i];
        std::string base = "spectrum/eigenpair" + std::to_string(i) + "/";

        double bethe = 0.0;
        int indeterminate = 0;
        for (const auto& r : sol.betheResiduals) {
            if (!r) {
                ++indeterminate;
                continue;
            }
            bethe = std::max(bethe, *r);
        }
        CheckRecord roots = makeCheck(base + "root-system", "bethe", bethe, p.tolEig);
        roots.fitted["lambda"] = formatCplx(sol.lambda);
        for (std::size_t m = 0; m < sol.roots.size(); ++m)
            roots.fitted["root" + std::to_string(m)] = formatCplx(sol.roots[m]);
        if (indeterminate > 0)
            roots.note = std::to_string(indeterminate) + " indeterminate root conditions";
        report.checks.push_back(std::move(roots));

        report.checks.push_back(makeCheck(base + "eigenvalue-formula", "eigenvalue-formula",
                                          sol.degenerate ? 0.0 : sol.lambdaFormulaResidual,
                                          p.tolEig));
        report.checks.push_back(
            makeCheck(base + "difference-equation", "difference-operator", sol.odeResidual,
                      p.tolEig));
    }

    DualityReport dual = dualityCheck(twoJ, v, p);
    CheckRecord dualRec = makeCheck("spectrum/duality", "duality",
                                    std::max(dual.eigenvalueDistance, dual.rootDistance),
                                    p.tolEig);
    dualRec.note = "root distance under the transformation without the coupling swap: " +
                   formatDouble(dual.brokenRootDistance);
    report.checks.push_back(std::move(dualRec));

    report.wallTimeSeconds = elapsedSeconds(start);
    int code = exitFor(report);
    return CommandResult{std::move(report), code};
}

CommandResult cmdOnsager(const RunConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    Cplx c0 = cfg.params.c0;

    Report report;
    report.command = "onsager";
    report.seed = cfg.seed;

    auto addChecks = [&](Cplx t, const std::string& suffix) {
        TDPair pair = buildLoopPair(cfg.twoJ, t, c0);
        CheckRecord dg = makeCheck("onsager/double-commutator" + suffix, "dolan-grady",
                                   checkDolanGrady(pair).max(), cfg.params.tolId);
        dg.inputs["t"] = formatCplx(t);
        dg.inputs["c0"] = formatCplx(c0);
        dg.fitted["rho"] = formatCplx(pair.rho);
        report.checks.push_back(std::move(dg));

        TDPair scaled = pair;
        scaled.A = 2.0 * pair.A;
        scaled.Astar = 2.0 * pair.Astar;
        scaled.rho = 16.0 / c0;
        CheckRecord dg2 = makeCheck("onsager/double-commutator-rescaled" + suffix, "dolan-grady",
                                    checkDolanGrady(scaled).max(), cfg.params.tolId);
        dg2.inputs["t"] = formatCplx(t);
        dg2.fitted["rho"] = formatCplx(scaled.rho);
        report.checks.push_back(std::move(dg2));

        CheckRecord rec = makeCheck("onsager/recursion" + suffix, "onsager-recursion",
                                    onsagerIdentityResidual(cfg.twoJ, t), cfg.params.tolId);
        rec.inputs["t"] = formatCplx(t);
        report.checks.push_back(std::move(rec));
    };

    addChecks(cfg.t, "");
    Rng rng(cfg.seed);
    for (int draw = 0; draw < 3; ++draw)
        addChecks(rng.annulus(0.5, 1.6), "/draw" + std::to_string(draw));

    report.wallTimeSeconds = elapsedSeconds(start);
    int code = exitFor(report);
    return CommandResult{std::move(report), code};
}

void emitReport(const Report& report, const RunConfig& cfg) {
    std::string json = report.toJson();
    if (cfg.outPath.empty()) {
        std::cout << json;
        return;
    }
    std::ofstream out(cfg.outPath);
    if (!out) throw std::runtime_error("cannot write report to '" + cfg.outPath + "'");
    out << json;
}

}  // namespace qtri
