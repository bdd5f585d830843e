#pragma once

#include "qtri/affine.hpp"
#include "qtri/linalg.hpp"

namespace qtri {

/// A tridiagonal pair realized on a chain representation:
///   A  = Q+/c0 + Q̄-,   A* = Q- + Q̄+/c0
/// (evaluated through the N-fold coproduct), together with the structure
/// constant rho = (s+1/s)^2/c0 of the cubic relations the pair satisfies.
/// On the classical branch the pair instead comes from the loop realization
/// and rho = 4/c0.
struct TDPair {
    Operator A, Astar;
    Cplx rho;
    Params params;
    ChainSpec chain;
    bool classical = false;
};

TDPair buildTDPair(const ChainSpec& chain, const Params& p);

/// Shifted pair (Ã, Ã*) = (A + εп·q^H, A* + ε₋·q^{−H}); satisfies the same
/// cubic relations for any ε±.
TDPair buildTildePair(const ChainSpec& chain, const Params& p, Cplx epsPlus, Cplx epsMinus);

/// Residuals of the two cubic (tridiagonal) relations
///   [A,  A²A* + A*A² − (q+q⁻¹) A A* A − ρ A*] = 0
///   [A*, A*²A + A A*² − (q+q⁻¹) A* A A* − ρ A ] = 0
/// in relative Frobenius norm. Works on both branches (q+q⁻¹ = 2 at s = 1,
/// where the relations become the classical double-commutator identities).
struct PairResiduals {
    double first;
    double second;
    double max() const { return first > second ? first : second; }
};
PairResiduals checkTridiagonal(const TDPair& pair);
PairResiduals checkTridiagonalRaw(const Operator& A, const Operator& Astar,
                                  Cplx rho, Cplx q);

/// Residuals of the quadratic-cubic (Askey-Wilson / Leonard pair) relations
///   A²A* + A*A² − (q+q⁻¹) A A* A = ρ A* + ω A    (and the mirrored one with
/// the same ρ, ω). These hold only for one-site chains.
PairResiduals checkAskeyWilson(const TDPair& pair, Cplx omega);

/// Closed-form ω for a one-site pair:
/// ω = −(v² q^{−1/2} + v⁻² q^{1/2}) (q^{j+1/2} + q^{−j−1/2}) / c0.
Cplx awOmega(int twoJ, Cplx v, const Params& p);

/// Least-squares ω for the first relation (and the residual at the optimum).
/// For multi-site pairs no ω works; the minimum certifies the failure.
struct OmegaFit {
    Cplx omega;
    double relResidualFirst;
    double relResidualSecond;  // second relation evaluated at the same ω
};
OmegaFit bestFitAskeyWilson(const TDPair& pair);

/// The first two commuting charges built from a pair:
///   I1 = κ A + κ* A*
///   I3 = κ([[A,A*]_q, A]_q + ρ A*) + κ*([[A*,A]_q, A*]_q + ρ A)
/// with [x,y]_q = q^{1/2} x y − q^{−1/2} y x. `higher` holds directions
/// extracted numerically from longer-chain transfer matrices.
struct ChargeSet {
    Operator I1, I3;
    std::vector<Operator> higher;
    Params params;
    ChainSpec chain;
    Cplx rho;
};
ChargeSet buildCharges(const TDPair& pair);

/// ||[I1, I3]|| / max(1, ||I1|| ||I3||).
double involutionResidual(const ChargeSet& charges);

/// One-site identity: I3 lies in span{A, A*}; returns the fit and the
/// expected coefficients (−ω κ, −ω κ*) for cross-checking.
struct ChargeSpanReport {
    SpanFit fit;
    Cplx expectedOnA;
    Cplx expectedOnAstar;
};
ChargeSpanReport chargeSpanOneSite(const TDPair& pair, const ChargeSet& charges);

/// Coideal-type property of the shifted pair, restated testably: the two-site
/// coproduct image of Ã decomposes as X0 ⊗ I + X1 ⊗ Ã₂ + X2 ⊗ Ã*₂ with some
/// left factors X_i (found by least squares). Returns the decomposition
/// residuals for Ã and Ã*.
struct CoidealReport {
    double residualA;
    double residualAstar;
    double max() const { return residualA > residualAstar ? residualA : residualAstar; }
};
CoidealReport coidealDecomposition(const Site& site1, const Site& site2,
                                   const Params& p, Cplx epsPlus, Cplx epsMinus);

/// Classical loop realization at q = 1 (separate code path, no limits):
///   A = (E+ + E−)/√c0,  A* = (t E+ + t⁻¹ E−)/√c0,  rho = 4/c0.
TDPair buildLoopPair(int twoJ, Cplx t, Cplx c0 = Cplx{1.0, 0.0});

/// Double-commutator (Dolan-Grady-type) residuals for a classical pair:
///   [A, [A, [A, A*]]] = ρ [A, A*]   and the mirrored relation.
/// Throws std::invalid_argument on a deformed pair.
PairResiduals checkDolanGrady(const TDPair& pair);

/// Residual of the defining recursion of the classical generator family
/// A_m = 2 t^m E+ + 2 t^{−m} E−:  (1/8)[A₀, [A₀, A₁]] = A₁ − A₋₁.
double onsagerIdentityResidual(int twoJ, Cplx t);

}  // namespace qtri
