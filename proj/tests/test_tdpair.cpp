#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtri/tdpair.hpp"

using namespace qtri;

namespace {
Params testParams() {
    Params p;
    p.s = {1.22, 0.09};
    p.c0 = {0.85, 0.35};
    p.kappa = {1.1, -0.2};
    p.kappaStar = {0.7, 0.4};
    return p;
}

ChainSpec twoSites() {
    ChainSpec chain;
    chain.sites = {Site{1, {1.05, 0.25}}, Site{2, {0.85, -0.15}}};
    return chain;
}
}  // namespace

TEST_CASE("chain pairs satisfy the cubic relations with the structural rho") {
    Params p = testParams();
    TDPair pair = buildTDPair(twoSites(), p);
    CHECK(std::abs(pair.rho - (p.s + 1.0 / p.s) * (p.s + 1.0 / p.s) / p.c0) < 1e-14);
    CHECK(checkTridiagonal(pair).max() < 1e-12);

    // The relations pin rho: a 1% perturbation is loudly visible.
    TDPair wrong = pair;
    wrong.rho *= 1.01;
    CHECK(checkTridiagonal(wrong).max() > 1e-4);
}

TEST_CASE("building a deformed pair on the classical branch is rejected") {
    Params p = testParams();
    p.classical = true;
    p.s = 1.0;
    CHECK_THROWS_AS(buildTDPair(twoSites(), p), std::invalid_argument);
}

TEST_CASE("shifted pairs satisfy the same relations for any shifts") {
    Params p = testParams();
    TDPair tilde = buildTildePair(twoSites(), p, {0.45, 0.3}, {1.2, -0.7});
    CHECK(checkTridiagonal(tilde).max() < 1e-12);
    TDPair wrong = tilde;
    wrong.rho *= 1.01;
    CHECK(checkTridiagonal(wrong).max() > 1e-4);
}

TEST_CASE("one-site pairs close the quadratic relations with the closed-form omega") {
    Params p = testParams();
    Cplx v{0.95, 0.3};
    ChainSpec chain;
    chain.sites = {Site{3, v}};
    TDPair pair = buildTDPair(chain, p);

    Cplx q = p.q();
    Cplx omega = awOmega(3, v, p);
    // Closed form spelled out: -(v^2 q^{-1/2} + v^{-2} q^{1/2}) (q^{j+1/2} + q^{-j-1/2}) / c0,
    // with all fractional powers integer powers of q^{1/4}.
    Cplx direct = -(v * v * p.qq(-2) + p.qq(2) / (v * v)) * (p.qq(2 * 3 + 2) + p.qq(-2 * 3 - 2)) /
                  p.c0;
    CHECK(std::abs(omega - direct) < 1e-13);
    CHECK(std::abs(q * q - p.qq(8)) < 1e-13);  // quarter-power bookkeeping

    CHECK(checkAskeyWilson(pair, omega).max() < 1e-12);
    CHECK(checkAskeyWilson(pair, omega * 1.01).max() > 1e-4);

    // The least-squares omega agrees with the closed form.
    OmegaFit fit = bestFitAskeyWilson(pair);
    CHECK(std::abs(fit.omega - omega) / std::abs(omega) < 1e-12);
    CHECK(fit.relResidualFirst < 1e-12);
    CHECK(fit.relResidualSecond < 1e-12);
}

TEST_CASE("two-site pairs admit no omega") {
    Params p = testParams();
    TDPair pair = buildTDPair(twoSites(), p);
    OmegaFit forward = bestFitAskeyWilson(pair);
    CHECK(forward.relResidualFirst > 1e-7);
    TDPair swapped = pair;
    std::swap(swapped.A, swapped.Astar);
    CHECK(bestFitAskeyWilson(swapped).relResidualFirst > 1e-7);
}

TEST_CASE("charges commute and reduce to the pair span on one site") {
    Params p = testParams();
    TDPair pair = buildTDPair(twoSites(), p);
    ChargeSet charges = buildCharges(pair);
    CHECK(relResidual(charges.I1, p.kappa * pair.A + p.kappaStar * pair.Astar) < 1e-15);
    CHECK(involutionResidual(charges) < 1e-12);

    ChainSpec one;
    one.sites = {Site{2, {1.1, -0.2}}};
    TDPair single = buildTDPair(one, p);
    ChargeSet singleCharges = buildCharges(single);
    ChargeSpanReport span = chargeSpanOneSite(single, singleCharges);
    CHECK(span.fit.relResidual < 1e-12);
    Cplx omega = awOmega(2, one.sites[0].v, p);
    CHECK(std::abs(span.expectedOnA - (-omega * p.kappa)) < 1e-13);
    CHECK(std::abs(span.expectedOnAstar - (-omega * p.kappaStar)) < 1e-13);
    CHECK(std::abs(span.fit.coeffs[0] - span.expectedOnA) / std::abs(span.expectedOnA) < 1e-11);
    CHECK(std::abs(span.fit.coeffs[1] - span.expectedOnAstar) / std::abs(span.expectedOnAstar) <
          1e-11);
}

TEST_CASE("the involution is a property of the couplings entering both charges") {
    // Same coupling pair in I1 and I3 commutes; unrelated couplings between
    // the two charges generically do not. This guards against an involution
    // check that would pass vacuously.
    Params p = testParams();
    TDPair pair = buildTDPair(twoSites(), p);
    ChargeSet charges = buildCharges(pair);
    Params other = p;
    other.kappa = {0.3, 0.9};
    other.kappaStar = {1.4, 0.1};
    TDPair pairOther = pair;
    pairOther.params = other;
    ChargeSet mixed = buildCharges(pairOther);
    CHECK(commutatorResidual(charges.I1, mixed.I3) > 1e-4);
}

TEST_CASE("shifted two-site images split over the shifted one-site operators") {
    Params p = testParams();
    CoidealReport rep = coidealDecomposition(Site{1, {1.05, 0.25}}, Site{2, {0.85, -0.15}}, p,
                                             {0.5, 0.2}, {0.9, -0.4});
    CHECK(rep.max() < 1e-12);
}

TEST_CASE("loop realization satisfies the double-commutator relations") {
    Cplx t{1.4, 0.3};
    Cplx c0{0.9, -0.2};
    TDPair pair = buildLoopPair(4, t, c0);
    CHECK(pair.classical);
    CHECK(std::abs(pair.rho - 4.0 / c0) < 1e-14);
    CHECK(checkDolanGrady(pair).max() < 1e-12);

    // The cubic-relation checker degenerates correctly at q = 1.
    CHECK(checkTridiagonal(pair).max() < 1e-12);

    // Doubling the pair rescales rho by 4.
    TDPair scaled = pair;
    scaled.A = 2.0 * pair.A;
    scaled.Astar = 2.0 * pair.Astar;
    scaled.rho = 16.0 / c0;
    CHECK(checkDolanGrady(scaled).max() < 1e-12);

    TDPair wrong = pair;
    wrong.rho *= 1.02;
    CHECK(checkDolanGrady(wrong).max() > 1e-4);
}

TEST_CASE("the double-commutator checker refuses deformed pairs") {
    Params p = testParams();
    TDPair deformed = buildTDPair(twoSites(), p);
    CHECK_THROWS_AS(checkDolanGrady(deformed), std::invalid_argument);
}

TEST_CASE("classical generator family recursion") {
    for (int twoJ : {1, 2, 3, 4}) CHECK(onsagerIdentityResidual(twoJ, {1.3, 0.25}) < 1e-12);
}
