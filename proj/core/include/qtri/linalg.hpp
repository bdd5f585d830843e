#pragma once

#include <vector>

#include "qtri/operator.hpp"

namespace qtri {

/// Full complex eigendecomposition, deterministically ordered by
/// (Re, Im) of the eigenvalue. Each eigenpair is residual-checked:
/// ||M v − λ v|| / (||M|| ||v||) must not exceed tolEig, else this throws.
struct EigenSystem {
    Vector values;       // sorted
    Matrix vectors;      // columns match values
    double maxResidual;  // worst eigenpair residual actually observed
};
EigenSystem eigenDecompose(const Matrix& m, double tolEig);

/// Roots of sum_k coeffs[k] z^k (ascending degree) via the companion matrix.
/// Leading coefficients with |c| <= leadTol * max|c| are stripped first;
/// throws if everything is stripped. Each root r is residual-checked:
/// |p(r)| / (||coeffs|| * max(1,|r|)^deg) <= tolEig.
std::vector<Cplx> polyRoots(const std::vector<Cplx>& coeffs, double tolEig,
                            double leadTol = 1e-12);

Cplx polyEval(const std::vector<Cplx>& coeffs, Cplx z);

/// Least-squares decomposition of target over span{basis} in Frobenius
/// geometry. relResidual is ||target − fit|| / max(1, ||target||).
struct SpanFit {
    std::vector<Cplx> coeffs;
    double relResidual;
};
SpanFit fitSpan(const Operator& target, const std::vector<Operator>& basis);

/// Least-squares decomposition of an operator on V1 ⊗ V2 as
/// sum_i X_i ⊗ B_i with the right factors B_i prescribed and the left
/// factors X_i free. Returns the fitted X_i and the relative residual.
struct FactorFit {
    std::vector<Operator> left;
    double relResidual;
};
FactorFit fitLeftFactors(const Operator& target, int dimLeft, int dimRight,
                         const std::vector<Operator>& rightBasis);

/// Max pairwise distance between two equal-size complex multisets under the
/// best matching (exact for n <= 8, sorted comparison beyond that).
double multisetDistance(std::vector<Cplx> a, std::vector<Cplx> b);

/// Numerical rank of the span of a family of operators (stacked as vectors):
/// number of singular values > relGap * sigma_max, plus the ratio
/// sigma_1/sigma_2 as a rank-1 diagnostic (infinity if only one sigma).
struct RankInfo {
    int rank;
    double leadingGap;
    std::vector<double> singularValues;
};
RankInfo spanRank(const std::vector<Operator>& ops, double relGap);

/// Orthonormal complement directions: project each op onto the orthogonal
/// complement of span{basis} and return an orthonormal family spanning the
/// leftovers (singular vectors with sigma > relGap * sigma_max).
std::vector<Operator> orthogonalComplementSpan(
    const std::vector<Operator>& ops, const std::vector<Operator>& basis,
    double relGap);

}  // namespace qtri
