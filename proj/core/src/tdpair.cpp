#include "qtri/tdpair.hpp"

#include <algorithm>
#include <cmath>

namespace qtri {

TDPair buildTDPair(const ChainSpec& chain, const Params& p) {
    if (p.classical)
        throw std::invalid_argument("buildTDPair: use buildLoopPair on the classical branch");
    p.validate();
    AffineGens g = nCoproduct(chain, p);
    TDPair pair;
    pair.A = (1.0 / p.c0) * g.Qp + g.Qbm;
    pair.Astar = g.Qm + (1.0 / p.c0) * g.Qbp;
    pair.rho = p.rho();
    pair.params = p;
    pair.chain = chain;
    pair.classical = false;
    return pair;
}

TDPair buildTildePair(const ChainSpec& chain, const Params& p, Cplx epsPlus, Cplx epsMinus) {
    TDPair pair = buildTDPair(chain, p);
    AffineGens g = nCoproduct(chain, p);
    pair.A += epsPlus * g.qH;
    pair.Astar += epsMinus * g.qHi;
    return pair;
}

PairResiduals checkTridiagonalRaw(const Operator& A, const Operator& Astar, Cplx rho, Cplx q) {
    Cplx w = q + 1.0 / q;
    double an = A.norm();
    double bn = Astar.norm();

    Operator inner1 = A * A * Astar + Astar * A * A - w * (A * Astar * A) - rho * Astar;
    Operator res1 = commutator(A, inner1);
    double scale1 = std::max({1.0, an * an * an * bn, std::abs(rho) * an * bn});

    Operator inner2 = Astar * Astar * A + A * Astar * Astar - w * (Astar * A * Astar) - rho * A;
    Operator res2 = commutator(Astar, inner2);
    double scale2 = std::max({1.0, bn * bn * bn * an, std::abs(rho) * an * bn});

    return {res1.norm() / scale1, res2.norm() / scale2};
}

PairResiduals checkTridiagonal(const TDPair& pair) {
    Cplx q = pair.classical ? Cplx{1.0, 0.0} : pair.params.q();
    return checkTridiagonalRaw(pair.A, pair.Astar, pair.rho, q);
}

PairResiduals checkAskeyWilson(const TDPair& pair, Cplx omega) {
    const Operator& A = pair.A;
    const Operator& B = pair.Astar;
    Cplx q = pair.params.q();
    Cplx w = q + 1.0 / q;
    Cplx rho = pair.rho;
    double an = A.norm();
    double bn = B.norm();

    Operator res1 = A * A * B + B * A * A - w * (A * B * A) - rho * B - omega * A;
    double scale1 = std::max({1.0, an * an * bn, std::abs(rho) * bn, std::abs(omega) * an});
    Operator res2 = B * B * A + A * B * B - w * (B * A * B) - rho * A - omega * B;
    double scale2 = std::max({1.0, bn * bn * an, std::abs(rho) * an, std::abs(omega) * bn});
    return {res1.norm() / scale1, res2.norm() / scale2};
}

Cplx awOmega(int twoJ, Cplx v, const Params& p) {
    Cplx vv = v * v;
    return -(vv * p.qq(-2) + p.qq(2) / vv) * casimirEigenvalue(twoJ, p) / p.c0;
}

OmegaFit bestFitAskeyWilson(const TDPair& pair) {
    const Operator& A = pair.A;
    const Operator& B = pair.Astar;
    Cplx q = pair.params.q();
    Cplx w = q + 1.0 / q;

    Operator m1 = A * A * B + B * A * A - w * (A * B * A) - pair.rho * B;
    // Least-squares omega for m1 = omega * A in Frobenius geometry.
    Cplx num = (A.mat.adjoint() * m1.mat).trace();
    Cplx den = (A.mat.adjoint() * A.mat).trace();
    Cplx omega = num / den;
    PairResiduals both = checkAskeyWilson(pair, omega);
    return {omega, both.first, both.second};
}

ChargeSet buildCharges(const TDPair& pair) {
    const Params& p = pair.params;
    Cplx s = p.s;
    ChargeSet set;
    set.I1 = p.kappa * pair.A + p.kappaStar * pair.Astar;
    Operator bracketA = qCommutator(qCommutator(pair.A, pair.Astar, s), pair.A, s);
    Operator bracketB = qCommutator(qCommutator(pair.Astar, pair.A, s), pair.Astar, s);
    set.I3 = p.kappa * (bracketA + pair.rho * pair.Astar) +
             p.kappaStar * (bracketB + pair.rho * pair.A);
    set.params = p;
    set.chain = pair.chain;
    set.rho = pair.rho;
    return set;
}

double involutionResidual(const ChargeSet& charges) {
    return commutatorResidual(charges.I1, charges.I3);
}

ChargeSpanReport chargeSpanOneSite(const TDPair& pair, const ChargeSet& charges) {
    if (pair.chain.size() != 1)
        throw std::invalid_argument("chargeSpanOneSite: requires a one-site chain");
    ChargeSpanReport report;
    report.fit = fitSpan(charges.I3, {pair.A, pair.Astar});
    Cplx omega = awOmega(pair.chain.sites[0].twoJ, pair.chain.sites[0].v, pair.params);
    report.expectedOnA = -omega * pair.params.kappa;
    report.expectedOnAstar = -omega * pair.params.kappaStar;
    return report;
}

CoidealReport coidealDecomposition(const Site& site1, const Site& site2, const Params& p,
                                   Cplx epsPlus, Cplx epsMinus) {
    ChainSpec one;
    one.sites = {site2};
    ChainSpec two;
    two.sites = {site1, site2};

    TDPair right = buildTildePair(one, p, epsPlus, epsMinus);
    TDPair full = buildTildePair(two, p, epsPlus, epsMinus);

    int d1 = site1.twoJ + 1;
    int d2 = site2.twoJ + 1;
    std::vector<Operator> basis = {Operator::identity({d2}), right.A, right.Astar};
    CoidealReport report;
    report.residualA = fitLeftFactors(full.A, d1, d2, basis).relResidual;
    report.residualAstar = fitLeftFactors(full.Astar, d1, d2, basis).relResidual;
    return report;
}

TDPair buildLoopPair(int twoJ, Cplx t, Cplx c0) {
    if (std::abs(t) < 1e-12) throw std::invalid_argument("buildLoopPair: t must be nonzero");
    if (std::abs(c0) < 1e-12) throw std::invalid_argument("buildLoopPair: c0 must be nonzero");
    ClassicalSpinRep rep = buildClassicalSpinRep(twoJ);
    Cplx scale = 1.0 / std::sqrt(c0);
    TDPair pair;
    pair.A = scale * (rep.Ep + rep.Em);
    pair.Astar = scale * (t * rep.Ep + (1.0 / t) * rep.Em);
    pair.rho = 4.0 / c0;
    pair.params = Params{};
    pair.params.s = {1.0, 0.0};
    pair.params.c0 = c0;
    pair.params.classical = true;
    pair.chain.sites = {Site{twoJ, t}};
    pair.classical = true;
    return pair;
}

PairResiduals checkDolanGrady(const TDPair& pair) {
    if (!pair.classical)
        throw std::invalid_argument(
            "checkDolanGrady: double-commutator relations hold only on the classical branch");
    const Operator& A = pair.A;
    const Operator& B = pair.Astar;
    double an = A.norm();
    double bn = B.norm();

    Operator res1 = commutator(A, commutator(A, commutator(A, B))) - pair.rho * commutator(A, B);
    double scale1 = std::max({1.0, an * an * an * bn, std::abs(pair.rho) * an * bn});
    Operator res2 = commutator(B, commutator(B, commutator(B, A))) - pair.rho * commutator(B, A);
    double scale2 = std::max({1.0, bn * bn * bn * an, std::abs(pair.rho) * an * bn});
    return {res1.norm() / scale1, res2.norm() / scale2};
}

double onsagerIdentityResidual(int twoJ, Cplx t) {
    if (std::abs(t) < 1e-12)
        throw std::invalid_argument("onsagerIdentityResidual: t must be nonzero");
    ClassicalSpinRep rep = buildClassicalSpinRep(twoJ);
    auto gen = [&](int m) {
        return 2.0 * ipow(t, m) * rep.Ep + 2.0 * ipow(t, -m) * rep.Em;
    };
    Operator a0 = gen(0);
    Operator a1 = gen(1);
    Operator lhs = 0.125 * commutator(a0, commutator(a0, a1));
    Operator rhs = a1 - gen(-1);
    return relResidual(lhs, rhs);
}

}  // namespace qtri
