#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtri/affine.hpp"

using namespace qtri;

namespace {
Params testParams() {
    Params p;
    p.s = {1.19, 0.13};
    p.c0 = {1.1, -0.3};
    return p;
}
}  // namespace

TEST_CASE("spin-1/2 matrices in the monomial basis") {
    Params p = testParams();
    SpinRep rep = buildSpinRep(1, p);
    REQUIRE(rep.dim() == 2);

    // Raising: z^0 -> [1]_s z^1 = z^1; z^1 -> [0]_s = 0. ([1]_s is evaluated
    // as a quotient, so exact equality is not guaranteed.)
    CHECK(std::abs(rep.Sp.mat(1, 0) - Cplx{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(rep.Sp.mat(0, 0)) == 0.0);
    CHECK(std::abs(rep.Sp.mat(0, 1)) == 0.0);
    CHECK(std::abs(rep.Sp.mat(1, 1)) == 0.0);
    // Lowering mirrors it.
    CHECK(std::abs(rep.Sm.mat(0, 1) - Cplx{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(rep.Sm.mat(1, 0)) == 0.0);
    // Weight operator diag(s^{-1/2}, s^{1/2}).
    Cplx sqrtS = std::sqrt(p.s);
    CHECK(std::abs(rep.Ks.mat(0, 0) - 1.0 / sqrtS) < 1e-15);
    CHECK(std::abs(rep.Ks.mat(1, 1) - sqrtS) < 1e-15);
    CHECK(relResidual(rep.Ks * rep.KsInv, Operator::identity({2})) < 1e-15);
}

TEST_CASE("spin representations satisfy the defining relations") {
    Params p = testParams();
    for (int twoJ : {1, 2, 3, 4}) {
        SpinRep rep = buildSpinRep(twoJ, p);
        // Weights: Ks Sp Ks^{-1} = s Sp,  Ks Sm Ks^{-1} = s^{-1} Sm.
        CHECK(relResidual(rep.Ks * rep.Sp * rep.KsInv, p.s * rep.Sp) < 1e-13);
        CHECK(relResidual(rep.Ks * rep.Sm * rep.KsInv, (1.0 / p.s) * rep.Sm) < 1e-13);
        // [Sp, Sm] = (Ks^2 - Ks^{-2}) / (s - s^{-1}).
        Operator rhs = (1.0 / (p.s - 1.0 / p.s)) * (rep.Ks * rep.Ks - rep.KsInv * rep.KsInv);
        CHECK(relResidual(commutator(rep.Sp, rep.Sm), rhs) < 1e-13);
    }
}

TEST_CASE("the central element acts as its closed-form scalar") {
    Params p = testParams();
    // j = 1/2 pins the normalization: the scalar is q + q^{-1}.
    CHECK(std::abs(casimirEigenvalue(1, p) - (p.q() + 1.0 / p.q())) < 1e-14);
    for (int twoJ : {1, 2, 3, 4, 5}) CHECK(casimirResidual(twoJ, p) < 1e-12);
}

TEST_CASE("evaluation weights the raising and lowering by the spectral parameter") {
    Params p = testParams();
    Cplx v{0.9, 0.4};
    AffineGens g = evaluationHom(2, v, p);
    SpinRep rep = buildSpinRep(2, p);
    CHECK(relResidual(g.Qp, v * (rep.Sp * rep.Ks)) < 1e-15);
    CHECK(relResidual(g.Qm, v * (rep.Sm * rep.KsInv)) < 1e-15);
    CHECK(relResidual(g.Qbp, (1.0 / v) * (rep.Sp * rep.KsInv)) < 1e-15);
    CHECK(relResidual(g.Qbm, (1.0 / v) * (rep.Sm * rep.Ks)) < 1e-15);
    CHECK(relResidual(g.qH, rep.Ks * rep.Ks) < 1e-15);
}

TEST_CASE("affine relations hold in evaluation representations") {
    Params p = testParams();
    Rng rng(17);
    for (int twoJ : {1, 2, 3}) {
        AffineGens g = evaluationHom(twoJ, rng.annulus(0.7, 1.4), p);
        RelationReport report = checkAffineRelations(g, p);
        CHECK(report.max() < 1e-12);
    }
}

TEST_CASE("affine relations are stable under the chain coproduct") {
    Params p = testParams();
    AffineGens g1 = evaluationHom(1, {1.1, 0.2}, p);
    AffineGens g2 = evaluationHom(2, {0.8, -0.3}, p);
    CHECK(checkAffineRelations(coproduct(g1, g2), p).max() < 1e-12);
    CHECK(checkAffineRelations(coproductOpposite(g1, g2), p).max() < 1e-12);
}

TEST_CASE("a broken coproduct violates the relations") {
    // Replace the Cartan weight in the splitting of Q+ by the identity: the
    // mixed relations must notice.
    Params p = testParams();
    AffineGens g1 = evaluationHom(1, {1.1, 0.2}, p);
    AffineGens g2 = evaluationHom(1, {0.8, -0.3}, p);
    AffineGens broken = coproduct(g1, g2);
    broken.Qp = kron(g1.Qp, Operator::identity({2})) + kron(Operator::identity({2}), g2.Qp);
    CHECK(checkAffineRelations(broken, p).max() > 1e-3);
}

TEST_CASE("the coproduct is coassociative") {
    Params p = testParams();
    AffineGens g1 = evaluationHom(1, {1.05, 0.15}, p);
    AffineGens g2 = evaluationHom(2, {0.9, -0.2}, p);
    AffineGens g3 = evaluationHom(1, {1.2, 0.1}, p);
    AffineGens left = coproduct(coproduct(g1, g2), g3);
    AffineGens right = coproduct(g1, coproduct(g2, g3));
    CHECK(relResidual(left.Qp, right.Qp) < 1e-14);
    CHECK(relResidual(left.Qm, right.Qm) < 1e-14);
    CHECK(relResidual(left.Qbp, right.Qbp) < 1e-14);
    CHECK(relResidual(left.Qbm, right.Qbm) < 1e-14);
    CHECK(relResidual(left.qH, right.qH) < 1e-14);
}

TEST_CASE("chain specifications") {
    ChainSpec chain;
    chain.sites = {Site{1, {1.0, 0.1}}, Site{1, {1.0, 0.1}}, Site{1, {1.0, 0.1}}};
    CHECK(chain.homogeneous(1e-12));
    CHECK(chain.dims() == std::vector<int>{2, 2, 2});
    chain.sites[2].twoJ = 2;
    CHECK_FALSE(chain.homogeneous(1e-12));
    CHECK(chain.dims() == std::vector<int>{2, 2, 3});

    Params p = testParams();
    AffineGens folded = nCoproduct(chain, p);
    CHECK(folded.dims == std::vector<int>{2, 2, 3});
    CHECK(checkAffineRelations(folded, p).max() < 1e-12);
}
