#include "qtri/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qtri {

namespace {

Vector vectorize(const Matrix& m) {
    return Eigen::Map<const Vector>(m.data(), m.size());
}

bool lexLess(Cplx a, Cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

EigenSystem eigenDecompose(const Matrix& m, double tolEig) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eigenDecompose: matrix must be square");
    Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenDecompose: eigensolver did not converge");

    int n = static_cast<int>(m.rows());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const Vector& raw = solver.eigenvalues();
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return lexLess(raw(i), raw(j)); });

    EigenSystem sys;
    sys.values.resize(n);
    sys.vectors.resize(n, n);
    sys.maxResidual = 0.0;
    double mNorm = std::max(1.0, m.norm());
    for (int c = 0; c < n; ++c) {
        int i = order[c];
        sys.values(c) = raw(i);
        Vector v = solver.eigenvectors().col(i);
        v /= v.norm();
        sys.vectors.col(c) = v;
        double res = (m * v - raw(i) * v).norm() / mNorm;
        sys.maxResidual = std::max(sys.maxResidual, res);
    }
    if (sys.maxResidual > tolEig)
        throw std::runtime_error("eigenDecompose: eigenpair residual " +
                                 std::to_string(sys.maxResidual) + " exceeds tolerance");
    return sys;
}

Cplx polyEval(const std::vector<Cplx>& coeffs, Cplx z) {
    Cplx acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<Cplx> polyRoots(const std::vector<Cplx>& coeffs, double tolEig, double leadTol) {
    double top = 0.0;
    for (Cplx c : coeffs) top = std::max(top, std::abs(c));
    if (top == 0.0) throw std::invalid_argument("polyRoots: zero polynomial");

    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && std::abs(coeffs[deg]) <= leadTol * top) --deg;
    if (deg == 0) {
        if (std::abs(coeffs[0]) <= leadTol * top)
            throw std::invalid_argument("polyRoots: polynomial vanishes identically");
        return {};
    }

    Matrix companion = Matrix::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
    Eigen::ComplexEigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("polyRoots: companion eigensolver did not converge");

    double coeffNorm = 0.0;
    for (int i = 0; i <= deg; ++i) coeffNorm += std::norm(coeffs[i]);
    coeffNorm = std::sqrt(coeffNorm);

    std::vector<Cplx> roots(deg);
    for (int i = 0; i < deg; ++i) {
        Cplx r = solver.eigenvalues()(i);
        double scale = coeffNorm * std::pow(std::max(1.0, std::abs(r)), deg);
        double res = std::abs(polyEval(coeffs, r)) / scale;
        if (res > tolEig)
            throw std::runtime_error("polyRoots: root residual " + std::to_string(res) +
                                     " exceeds tolerance");
        roots[i] = r;
    }
    std::sort(roots.begin(), roots.end(), lexLess);
    return roots;
}

SpanFit fitSpan(const Operator& target, const std::vector<Operator>& basis) {
    if (basis.empty()) throw std::invalid_argument("fitSpan: empty basis");
    int n2 = static_cast<int>(target.mat.size());
    Matrix stack(n2, static_cast<int>(basis.size()));
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].dims != target.dims)
            throw std::invalid_argument("fitSpan: basis dimensions do not match target");
        stack.col(static_cast<int>(i)) = vectorize(basis[i].mat);
    }
    Vector tv = vectorize(target.mat);
    Vector sol = stack.colPivHouseholderQr().solve(tv);
    double res = (stack * sol - tv).norm() / std::max(1.0, tv.norm());
    SpanFit fit;
    fit.coeffs.assign(sol.data(), sol.data() + sol.size());
    fit.relResidual = res;
    return fit;
}

FactorFit fitLeftFactors(const Operator& target, int dimLeft, int dimRight,
                         const std::vector<Operator>& rightBasis) {
    if (rightBasis.empty()) throw std::invalid_argument("fitLeftFactors: empty basis");
    if (target.side() != dimLeft * dimRight)
        throw std::invalid_argument("fitLeftFactors: target side does not factor as requested");
    int m = static_cast<int>(rightBasis.size());
    Matrix stack(dimRight * dimRight, m);
    for (int i = 0; i < m; ++i) {
        if (rightBasis[i].side() != dimRight)
            throw std::invalid_argument("fitLeftFactors: basis operator has wrong side");
        stack.col(i) = vectorize(rightBasis[i].mat);
    }
    auto qr = stack.colPivHouseholderQr();

    std::vector<Operator> left(m, Operator({dimLeft}, Matrix::Zero(dimLeft, dimLeft)));
    double res2 = 0.0;
    for (int a = 0; a < dimLeft; ++a) {
        for (int c = 0; c < dimLeft; ++c) {
            // Block (a, c): the dimRight x dimRight matrix sum_i X_i(a,c) B_i.
            Matrix block(dimRight, dimRight);
            for (int b = 0; b < dimRight; ++b)
                for (int d = 0; d < dimRight; ++d)
                    block(b, d) = target.mat(a * dimRight + b, c * dimRight + d);
            Vector bv = vectorize(block);
            Vector sol = qr.solve(bv);
            for (int i = 0; i < m; ++i) left[static_cast<size_t>(i)].mat(a, c) = sol(i);
            res2 += (stack * sol - bv).squaredNorm();
        }
    }
    FactorFit fit;
    fit.left = std::move(left);
    fit.relResidual = std::sqrt(res2) / std::max(1.0, target.norm());
    return fit;
}

double multisetDistance(std::vector<Cplx> a, std::vector<Cplx> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("multisetDistance: multisets differ in size");
    size_t n = a.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        double best = std::numeric_limits<double>::infinity();
        do {
            double worst = 0.0;
            for (size_t i = 0; i < n; ++i)
                worst = std::max(worst, std::abs(a[i] - b[static_cast<size_t>(perm[i])]));
            best = std::min(best, worst);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
    std::sort(a.begin(), a.end(), lexLess);
    std::sort(b.begin(), b.end(), lexLess);
    double worst = 0.0;
    for (size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

RankInfo spanRank(const std::vector<Operator>& ops, double relGap) {
    if (ops.empty()) throw std::invalid_argument("spanRank: empty family");
    int n2 = static_cast<int>(ops[0].mat.size());
    Matrix stack(n2, static_cast<int>(ops.size()));
    for (size_t i = 0; i < ops.size(); ++i) stack.col(static_cast<int>(i)) = vectorize(ops[i].mat);
    Eigen::JacobiSVD<Matrix> svd(stack);
    RankInfo info;
    info.singularValues.assign(svd.singularValues().data(),
                               svd.singularValues().data() + svd.singularValues().size());
    double top = info.singularValues.empty() ? 0.0 : info.singularValues[0];
    info.rank = 0;
    for (double s : info.singularValues)
        if (s > relGap * top) ++info.rank;
    if (info.singularValues.size() >= 2 && info.singularValues[1] > 0.0)
        info.leadingGap = info.singularValues[0] / info.singularValues[1];
    else
        info.leadingGap = std::numeric_limits<double>::infinity();
    return info;
}

std::vector<Operator> orthogonalComplementSpan(const std::vector<Operator>& ops,
                                               const std::vector<Operator>& basis,
                                               double relGap) {
    if (ops.empty()) return {};
    int n2 = static_cast<int>(ops[0].mat.size());
    int rows = static_cast<int>(ops[0].mat.rows());

    // Orthonormalize the basis with a thin QR, then project it out.
    Matrix proj;
    if (!basis.empty()) {
        Matrix bstack(n2, static_cast<int>(basis.size()));
        for (size_t i = 0; i < basis.size(); ++i)
            bstack.col(static_cast<int>(i)) = vectorize(basis[i].mat);
        Eigen::HouseholderQR<Matrix> qr(bstack);
        Matrix q = qr.householderQ() * Matrix::Identity(n2, static_cast<int>(basis.size()));
        proj = q;
    }

    Matrix stack(n2, static_cast<int>(ops.size()));
    for (size_t i = 0; i < ops.size(); ++i) {
        Vector v = vectorize(ops[i].mat);
        if (proj.size() > 0) v -= proj * (proj.adjoint() * v);
        stack.col(static_cast<int>(i)) = v;
    }

    Eigen::JacobiSVD<Matrix> svd(stack, Eigen::ComputeThinU);
    double top = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
    std::vector<Operator> out;
    if (top == 0.0) return out;
    for (int i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) <= relGap * top) break;
        Vector col = svd.matrixU().col(i);
        Matrix m = Eigen::Map<const Matrix>(col.data(), rows, rows);
        out.emplace_back(ops[0].dims, std::move(m));
    }
    return out;
}

}  // namespace qtri
