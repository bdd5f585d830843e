#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtri/reflection.hpp"

using namespace qtri;

namespace {
Params testParams() {
    Params p;
    p.s = {1.18, 0.12};
    p.c0 = {1.05, -0.25};
    p.kappa = {0.9, 0.2};
    p.kappaStar = {1.0, 0.0};
    return p;
}

ChainSpec homogeneous(int n, Cplx k, const Params& p) {
    ChainSpec chain;
    for (int i = 0; i < n; ++i) chain.sites.push_back(Site{1, k * p.qq(1)});
    return chain;
}
}  // namespace

TEST_CASE("six-vertex matrix entries") {
    Params p = testParams();
    RMatrix r = buildR(p.s);
    Cplx u{1.3, -0.2};
    Operator m = r.eval(u);
    Cplx a = p.s * u - 1.0 / (p.s * u);
    Cplx b = u - 1.0 / u;
    Cplx c = p.s - 1.0 / p.s;
    CHECK(std::abs(m.mat(0, 0) - a) < 1e-15);
    CHECK(std::abs(m.mat(3, 3) - a) < 1e-15);
    CHECK(std::abs(m.mat(1, 1) - b) < 1e-15);
    CHECK(std::abs(m.mat(2, 2) - b) < 1e-15);
    CHECK(std::abs(m.mat(1, 2) - c) < 1e-15);
    CHECK(std::abs(m.mat(2, 1) - c) < 1e-15);
    double offStructure = std::abs(m.mat(0, 1)) + std::abs(m.mat(0, 2)) + std::abs(m.mat(0, 3)) +
                          std::abs(m.mat(1, 0)) + std::abs(m.mat(1, 3)) + std::abs(m.mat(2, 0)) +
                          std::abs(m.mat(2, 3)) + std::abs(m.mat(3, 0)) + std::abs(m.mat(3, 1)) +
                          std::abs(m.mat(3, 2));
    CHECK(offStructure == 0.0);
}

TEST_CASE("three-space exchange relation") {
    Params p = testParams();
    RMatrix r = buildR(p.s);
    Rng rng(31);
    for (int i = 0; i < 5; ++i)
        CHECK(yangBaxterResidual(r, rng.spectral(), rng.spectral()) < 1e-12);
}

TEST_CASE("one-site L-operator coefficients and exchange") {
    Params p = testParams();
    SpinRep rep = buildSpinRep(2, p);
    AuxLaurent l = buildL(rep, p);

    CHECK(relResidual(l.at(0, 0).coeffOrZero(1), p.qq(1) * rep.Ks) < 1e-14);
    CHECK(relResidual(l.at(0, 0).coeffOrZero(-1), -p.qq(-1) * rep.KsInv) < 1e-14);
    CHECK(relResidual(l.at(1, 1).coeffOrZero(1), p.qq(1) * rep.KsInv) < 1e-14);
    Cplx c = p.s - 1.0 / p.s;
    CHECK(relResidual(l.at(0, 1).coeffOrZero(0), c * rep.Sm) < 1e-14);
    CHECK(relResidual(l.at(1, 0).coeffOrZero(0), c * rep.Sp) < 1e-14);

    RMatrix r = buildR(p.s);
    Rng rng(32);
    for (int twoJ : {1, 2}) {
        AuxLaurent lj = buildL(buildSpinRep(twoJ, p), p);
        for (int i = 0; i < 5; ++i)
            CHECK(rllResidual(r, lj, rng.spectral(), rng.spectral()) < 1e-12);
    }
}

TEST_CASE("constant boundary matrix solves the boundary equation") {
    Params p = testParams();
    AuxLaurent k0 = buildK0({2}, p);
    Cplx split = p.s - 1.0 / p.s;
    CHECK(relResidual(k0.at(0, 1).coeffOrZero(0), (1.0 / (p.c0 * split)) * Operator::identity({2})) <
          1e-14);
    CHECK(relResidual(k0.at(1, 0).coeffOrZero(0), (1.0 / split) * Operator::identity({2})) < 1e-14);
    CHECK(k0.at(0, 0).empty());
    CHECK(k0.at(1, 1).empty());

    RMatrix r = buildR(p.s);
    Rng rng(33);
    for (int i = 0; i < 5; ++i)
        CHECK(reflectionResidual(r, k0, rng.spectral(), rng.spectral()) < 1e-12);
}

TEST_CASE("dressed boundary matrices: window and boundary equation") {
    Params p = testParams();
    Cplx k{1.1, 0.2};
    RMatrix r = buildR(p.s);
    Rng rng(34);
    for (int n : {1, 2}) {
        AuxLaurent K = dressK(homogeneous(n, k, p), k, p);
        CHECK(K.minDegree() == -2 * n);
        CHECK(K.maxDegree() == 2 * n);
        for (int i = 0; i < 5; ++i)
            CHECK(reflectionResidual(r, K, rng.spectral(), rng.spectral()) < 1e-12);
    }
}

TEST_CASE("diagonal scalar boundary requires a nonzero coupling") {
    Params p = testParams();
    CHECK_NOTHROW(buildKplus(p));
    p.kappa = 0.0;
    CHECK_THROWS_AS(buildKplus(p), std::invalid_argument);
}

TEST_CASE("transfer coefficients commute; a perturbed boundary breaks this") {
    Params p = testParams();
    p.kappaStar = 1.0 / p.kappa;
    Cplx k{1.1, 0.2};
    ChainSpec chain = homogeneous(2, k, p);
    AuxLaurent K = dressK(chain, k, p);
    TransferMatrix tm = buildTransfer(K, buildKplus(p), chain, k, p);
    CHECK(transferCoefficientCommutativity(tm) < 1e-12);
    Rng rng(35);
    for (int i = 0; i < 3; ++i)
        CHECK(transferCommutativityResidual(tm, rng.spectral(), rng.spectral()) < 1e-12);

    AuxLaurent broken = K;
    Matrix bump = Matrix::Zero(4, 4);
    bump(0, 2) = 0.05 * K.at(0, 0).maxCoeffNorm();
    broken.at(0, 0).add(1, Operator({2, 2}, bump));
    TransferMatrix tmBroken = buildTransfer(broken, buildKplus(p), chain, k, p);
    CHECK(transferCoefficientCommutativity(tmBroken) > 1e-6);
}

TEST_CASE("transfer coefficients project onto the charges") {
    Params p = testParams();
    p.kappaStar = 1.0 / p.kappa;
    Cplx k{1.1, 0.2};
    Cplx q = p.q();

    // One site: every coefficient is a multiple of I1, with the exact Laurent
    // profile q u^2 - q^{-1} u^{-2}.
    {
        ChainSpec chain = homogeneous(1, k, p);
        TransferMatrix tm = buildTransfer(dressK(chain, k, p), buildKplus(p), chain, k, p);
        ChargeSet charges = buildCharges(buildTDPair(chain, p));
        ChargeDecomposition dec = extractCharges(tm, charges);
        CHECK(dec.maxFitResidual < 1e-12);
        CHECK(dec.coefficientRank.rank == 1);
        CHECK(dec.coefficientRank.leadingGap > 1e8);
        CHECK(std::abs(dec.coefficients.at(2)[0] - q) < 1e-12);
        CHECK(std::abs(dec.coefficients.at(-2)[0] + 1.0 / q) < 1e-12);
        CHECK(std::abs(dec.fittedScale - q) < 1e-12);
        CHECK(dec.higherCount == 0);
    }

    // Two sites: coefficients decompose over {I1, I3, identity} and the I3
    // column carries the Laurent profile c0 (q u^2 - q^{-1} u^{-2}) / (s + 1/s).
    {
        ChainSpec chain = homogeneous(2, k, p);
        TransferMatrix tm = buildTransfer(dressK(chain, k, p), buildKplus(p), chain, k, p);
        ChargeSet charges = buildCharges(buildTDPair(chain, p));
        ChargeDecomposition dec = extractCharges(tm, charges);
        CHECK(dec.maxFitResidual < 1e-8);
        Cplx fuse = p.s + 1.0 / p.s;
        CHECK(std::abs(dec.coefficients.at(2)[1] - p.c0 * q / fuse) < 1e-8);
        CHECK(std::abs(dec.coefficients.at(-2)[1] + p.c0 / (q * fuse)) < 1e-8);
        CHECK(std::abs(dec.coefficients.at(0)[1]) < 1e-8);
        CHECK(std::abs(dec.coefficients.at(4)[1]) < 1e-8);
    }
}

TEST_CASE("charge extraction validates its preconditions") {
    Params p = testParams();
    p.kappaStar = 1.0 / p.kappa;
    Cplx k{1.1, 0.2};
    ChainSpec chain = homogeneous(2, k, p);
    AuxLaurent K = dressK(chain, k, p);
    TransferMatrix tm = buildTransfer(K, buildKplus(p), chain, k, p);
    ChargeSet charges = buildCharges(buildTDPair(chain, p));

    TransferMatrix badV = tm;
    for (Site& site : badV.chain.sites) site.v *= 1.1;
    CHECK_THROWS_AS(extractCharges(badV, charges), std::invalid_argument);

    TransferMatrix inhom = tm;
    inhom.chain.sites[1].v *= 1.3;
    CHECK_THROWS_AS(extractCharges(inhom, charges), std::invalid_argument);

    TransferMatrix badCoupling = tm;
    badCoupling.params.kappaStar = 2.0 * badCoupling.params.kappaStar;
    CHECK_THROWS_AS(extractCharges(badCoupling, charges), std::invalid_argument);
}

TEST_CASE("leading asymptotics of the dressed boundary reproduce the pair") {
    Params p = testParams();
    Cplx k{1.08, 0.18};
    for (int n : {1, 2}) {
        ChainSpec chain = homogeneous(n, k, p);
        AuxLaurent K = dressK(chain, k, p);
        TDPair pair = buildTDPair(chain, p);
        AsymptoticReport rep = asymptoticPair(K, pair);
        CHECK(rep.residualA < 1e-12);
        CHECK(rep.residualAstar < 1e-12);
        Cplx expected = p.qq(2 * n);
        CHECK(std::abs(rep.fittedScale - expected) / std::abs(expected) < 1e-12);
        Cplx split = p.s - 1.0 / p.s;
        CHECK(rep.offDiag12.relResidual < 1e-12);
        CHECK(rep.offDiag21.relResidual < 1e-12);
        CHECK(std::abs(rep.offDiag12.factor - 1.0 / (p.c0 * split)) < 1e-12);
        CHECK(std::abs(rep.offDiag21.factor - 1.0 / split) < 1e-12);
    }
}

TEST_CASE("one-site boundary matrix in closed form") {
    Params p = testParams();
    Cplx k{1.08, 0.18};
    ChainSpec chain = homogeneous(1, k, p);
    TDPair pair = buildTDPair(chain, p);

    AuxLaurent closed = closedFormK(pair);
    CHECK(relResidual(closed.at(0, 0).coeffOrZero(1), p.qq(2) * pair.A) < 1e-13);
    CHECK(relResidual(closed.at(0, 0).coeffOrZero(-1), -p.qq(-2) * pair.Astar) < 1e-13);
    CHECK(relResidual(closed.at(1, 1).coeffOrZero(1), p.qq(2) * pair.Astar) < 1e-13);
    CHECK(relResidual(closed.at(1, 1).coeffOrZero(-1), -p.qq(-2) * pair.A) < 1e-13);

    Cplx omega = awOmega(1, chain.sites[0].v, p);
    Cplx split = p.s - 1.0 / p.s;
    Cplx fuse = p.s + 1.0 / p.s;
    Operator mid = (1.0 / fuse) * qCommutator(pair.Astar, pair.A, p.s) +
                   (omega / (p.q() - 1.0 / p.q())) * Operator::identity({2});
    CHECK(relResidual(closed.at(0, 1).coeffOrZero(0), mid) < 1e-13);
    CHECK(relResidual(closed.at(0, 1).coeffOrZero(2), (p.qq(2) / (p.c0 * split)) *
                                                          Operator::identity({2})) < 1e-13);

    ClosedFormReport rep = checkClosedFormK(pair, k, {1.2, 0.3}, {0.85, -0.2});
    CHECK(rep.matchResidual < 1e-12);
    CHECK(std::abs(rep.fittedScale - 1.0) < 1e-12);
    CHECK(rep.reflectionResidual < 1e-12);

    ChainSpec two = homogeneous(2, k, p);
    CHECK_THROWS_AS(closedFormK(buildTDPair(two, p)), std::invalid_argument);
}
