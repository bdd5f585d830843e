#include "qtri/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qtri/linalg.hpp"

namespace qtri {

namespace {

struct DiffCoeffs {
    // Laurent coefficients of a, d, w: each is cm * z^{-1} + cp * z.
    Cplx am, ap, dm, dp, wm, wp;
};

DiffCoeffs diffCoeffs(int twoJ, Cplx v, const Params& p) {
    Cplx den = p.c0 * (p.s - 1.0 / p.s);
    Cplx vi = 1.0 / v;
    DiffCoeffs c;
    c.am = p.c0 * p.kappa * vi * p.qq(-twoJ) / den;
    c.ap = -p.kappa * v * p.qq(-3 * twoJ) / den;
    c.dp = p.kappaStar * vi * p.qq(3 * twoJ) / den;
    c.dm = -p.c0 * p.kappaStar * v * p.qq(twoJ) / den;
    c.wm = (p.c0 * p.kappa * vi * p.qq(-twoJ) - p.c0 * p.kappaStar * v * p.qq(twoJ)) / den;
    c.wp = (p.kappaStar * vi * p.qq(-twoJ) - p.kappa * v * p.qq(twoJ)) / den;
    return c;
}

bool rootsTooClose(const std::vector<Cplx>& roots, size_t l, double tolEig) {
    for (size_t m = 0; m < roots.size(); ++m) {
        if (m == l) continue;
        if (std::abs(roots[l] - roots[m]) < 10.0 * tolEig * std::max(1.0, std::abs(roots[l])))
            return true;
    }
    return false;
}

}  // namespace

Cplx DifferenceOperator::a(Cplx z) const {
    DiffCoeffs c = diffCoeffs(twoJ, v, params);
    return c.am / z + c.ap * z;
}

Cplx DifferenceOperator::d(Cplx z) const {
    DiffCoeffs c = diffCoeffs(twoJ, v, params);
    return c.dm / z + c.dp * z;
}

Cplx DifferenceOperator::w(Cplx z) const {
    DiffCoeffs c = diffCoeffs(twoJ, v, params);
    return c.wm / z + c.wp * z;
}

Cplx DifferenceOperator::apply(const std::vector<Cplx>& poly, Cplx z, Cplx lambda) const {
    Cplx q = params.q();
    return a(z) * polyEval(poly, q * z) + d(z) * polyEval(poly, z / q) -
           (w(z) + lambda) * polyEval(poly, z);
}

DifferenceOperator buildDifferenceOperator(int twoJ, Cplx v, const Params& p) {
    p.validate();
    if (std::abs(v) < 1e-12)
        throw std::invalid_argument("buildDifferenceOperator: v must be nonzero");
    DiffCoeffs c = diffCoeffs(twoJ, v, p);
    Cplx q = p.q();
    int dim = twoJ + 1;

    // Action on the monomial z^k:
    //   T z^k = (a_m q^k + d_m q^{-k} - w_m) z^{k-1} + (a_p q^k + d_p q^{-k} - w_p) z^{k+1}.
    // The k = 0 image of z^{-1} and the k = 2j image of z^{2j+1} must cancel
    // identically; their survival would mean the operator leaves the module.
    Matrix m = Matrix::Zero(dim, dim);
    double scale = 0.0;
    for (int k = 0; k < dim; ++k) {
        Cplx down = c.am * ipow(q, k) + c.dm * ipow(q, -k) - c.wm;
        Cplx up = c.ap * ipow(q, k) + c.dp * ipow(q, -k) - c.wp;
        scale = std::max({scale, std::abs(down), std::abs(up)});
        if (k - 1 >= 0) m(k - 1, k) = down;
        if (k + 1 < dim) m(k + 1, k) = up;
        if (k == 0 && std::abs(down) > p.tolId * std::max(1.0, scale))
            throw std::runtime_error(
                "buildDifferenceOperator: boundary image of z^{-1} did not cancel");
        if (k == twoJ && std::abs(up) > p.tolId * std::max(1.0, scale))
            throw std::runtime_error(
                "buildDifferenceOperator: boundary image of z^{2j+1} did not cancel");
    }

    DifferenceOperator op;
    op.twoJ = twoJ;
    op.v = v;
    op.params = p;
    op.m = std::move(m);
    return op;
}

std::vector<std::optional<double>> betheVerify(const std::vector<Cplx>& roots, int twoJ, Cplx v,
                                               const Params& p) {
    DifferenceOperator op;
    op.twoJ = twoJ;
    op.v = v;
    op.params = p;
    Cplx q = p.q();

    std::vector<std::optional<double>> out(roots.size());
    for (size_t l = 0; l < roots.size(); ++l) {
        if (rootsTooClose(roots, l, p.tolEig)) {
            out[l] = std::nullopt;
            continue;
        }
        Cplx zl = roots[l];
        Cplx dz = op.d(zl);
        DiffCoeffs c = diffCoeffs(twoJ, v, p);
        double dScale = std::abs(c.dp * zl) + std::abs(c.dm / zl);
        if (std::abs(dz) <= 10.0 * p.tolEig * std::max(1.0, dScale)) {
            out[l] = std::nullopt;
            continue;
        }
        Cplx lhs = op.a(zl) * q;
        Cplx rhs = dz;
        for (size_t m = 0; m < roots.size(); ++m) {
            if (m == l) continue;
            lhs *= q * zl - roots[m];
            rhs *= zl / q - roots[m];
        }
        double denom = std::abs(lhs) + std::abs(rhs);
        out[l] = denom == 0.0 ? std::optional<double>{} : std::abs(lhs - rhs) / denom;
    }
    return out;
}

Cplx lambdaFromRoots(const std::vector<Cplx>& roots, int twoJ, Cplx v, const Params& p) {
    Cplx sum{0.0, 0.0};
    for (Cplx z : roots) sum += z;
    Cplx prefactor =
        p.kappaStar * (1.0 / v) * p.qq(2 - twoJ) + p.kappa * v * p.qq(twoJ - 2);
    return -prefactor * sum / p.c0;
}

std::vector<Solution> solveSpectrum(const DifferenceOperator& op) {
    EigenSystem sys = eigenDecompose(op.m, op.params.tolEig);
    int dim = op.twoJ + 1;

    std::vector<Solution> solutions;
    solutions.reserve(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        Solution sol;
        sol.lambda = sys.values(i);
        Vector vec = sys.vectors.col(i);

        sol.polyCoeffs.assign(vec.data(), vec.data() + dim);
        double top = 0.0;
        for (Cplx c : sol.polyCoeffs) top = std::max(top, std::abs(c));
        Cplx lead = sol.polyCoeffs.back();
        sol.degenerate = std::abs(lead) <= 1e-8 * top;
        if (!sol.degenerate)
            for (Cplx& c : sol.polyCoeffs) c /= lead;

        if (sol.degenerate) {
            sol.lambdaFormulaResidual = std::numeric_limits<double>::quiet_NaN();
        } else {
            sol.roots = polyRoots(sol.polyCoeffs, op.params.tolEig);
            sol.betheResiduals = betheVerify(sol.roots, op.twoJ, op.v, op.params);
            Cplx predicted = lambdaFromRoots(sol.roots, op.twoJ, op.v, op.params);
            sol.lambdaFormulaResidual =
                std::abs(sol.lambda - predicted) / std::max(1.0, std::abs(sol.lambda));
        }

        // Difference equation on a fixed deterministic z-grid.
        double worst = 0.0;
        for (int g = 0; g < 8; ++g) {
            double radius = 0.85 + 0.07 * g;
            double phase = 0.41 + 2.0 * std::numbers::pi * g / 8.0;
            Cplx z = std::polar(radius, phase);
            Cplx q = op.params.q();
            Cplx t1 = op.a(z) * polyEval(sol.polyCoeffs, q * z);
            Cplx t2 = op.d(z) * polyEval(sol.polyCoeffs, z / q);
            Cplx t3 = (op.w(z) + sol.lambda) * polyEval(sol.polyCoeffs, z);
            double scale = std::max(1.0, std::abs(t1) + std::abs(t2) + std::abs(t3));
            worst = std::max(worst, std::abs(t1 + t2 - t3) / scale);
        }
        sol.odeResidual = worst;
        solutions.push_back(std::move(sol));
    }
    return solutions;
}

namespace {

struct SpectralData {
    std::vector<Cplx> lambdas;
    std::vector<std::vector<Cplx>> roots;  // matched to lambdas by index
};

SpectralData spectralData(int twoJ, Cplx v, const Params& p) {
    DifferenceOperator op = buildDifferenceOperator(twoJ, v, p);
    std::vector<Solution> sols = solveSpectrum(op);
    SpectralData data;
    for (const Solution& s : sols) {
        data.lambdas.push_back(s.lambda);
        data.roots.push_back(s.roots);
    }
    return data;
}

/// Worst per-eigenpair root-multiset distance, with eigenpairs matched by the
/// deterministic (Re, Im) eigenvalue ordering of the decomposition.
double matchedRootDistance(const SpectralData& a, const SpectralData& b) {
    double worst = 0.0;
    double scale = 1.0;
    for (size_t i = 0; i < a.roots.size(); ++i) {
        for (Cplx r : a.roots[i]) scale = std::max(scale, std::abs(r));
        worst = std::max(worst, multisetDistance(a.roots[i], b.roots[i]));
    }
    return worst / scale;
}

}  // namespace

DualityReport dualityCheck(int twoJ, Cplx v, const Params& p) {
    SpectralData base = spectralData(twoJ, v, p);

    Params dual = p;
    dual.s = 1.0 / p.s;
    dual.kappa = p.kappaStar;
    dual.kappaStar = p.kappa;
    SpectralData mapped = spectralData(twoJ, 1.0 / v, dual);

    Params broken = p;  // same map with the coupling swap omitted
    broken.s = 1.0 / p.s;
    SpectralData brokenMapped = spectralData(twoJ, 1.0 / v, broken);

    double lambdaScale = 1.0;
    for (Cplx l : base.lambdas) lambdaScale = std::max(lambdaScale, std::abs(l));

    DualityReport report;
    report.eigenvalueDistance = multisetDistance(base.lambdas, mapped.lambdas) / lambdaScale;
    report.rootDistance = matchedRootDistance(base, mapped);
    report.brokenEigenvalueDistance =
        multisetDistance(base.lambdas, brokenMapped.lambdas) / lambdaScale;
    report.brokenRootDistance = matchedRootDistance(base, brokenMapped);
    return report;
}

Cplx awEval(const AWSpec& spec, Cplx q, Cplx y) {
    Cplx term{1.0, 0.0};
    Cplx acc{1.0, 0.0};  // r = 0 term
    Cplx abcd = spec.a * spec.b * spec.c * spec.d;
    Cplx yi = 1.0 / y;
    for (int r = 1; r <= spec.n; ++r) {
        Cplx qr1 = ipow(q, r - 1);
        const std::pair<const char*, Cplx> lower[] = {
            {"(ab;q)", 1.0 - spec.a * spec.b * qr1},
            {"(ac;q)", 1.0 - spec.a * spec.c * qr1},
            {"(ad;q)", 1.0 - spec.a * spec.d * qr1},
            {"(q;q)", 1.0 - ipow(q, r)},
        };
        for (const auto& [name, factor] : lower)
            if (std::abs(factor) < 1e-13)
                throw std::runtime_error(std::string("awEval: lower factor ") + name +
                                         " vanishes at order " + std::to_string(r));
        Cplx numer = (1.0 - ipow(q, -spec.n) * qr1) * (1.0 - abcd * ipow(q, spec.n - 1) * qr1) *
                     (1.0 - spec.a * y * qr1) * (1.0 - spec.a * yi * qr1);
        term *= numer * q / (lower[0].second * lower[1].second * lower[2].second * lower[3].second);
        acc += term;
    }
    return acc;
}

std::vector<Cplx> awPolynomial(const AWSpec& spec, Cplx q) {
    int m = 2 * spec.n + 1;
    Matrix vand(m, m);
    Vector rhs(m);
    for (int pnt = 0; pnt < m; ++pnt) {
        Cplx y = std::polar(1.2, 0.37 + 2.0 * std::numbers::pi * pnt / m);
        for (int k = 0; k < m; ++k) vand(pnt, k) = ipow(y, k - spec.n);
        rhs(pnt) = awEval(spec, q, y);
    }
    Vector sol = vand.colPivHouseholderQr().solve(rhs);
    return {sol.data(), sol.data() + m};
}

namespace {

Cplx awXi(const AWSpec& spec, Cplx q, Cplx y) {
    Cplx y2 = y * y;
    return (1.0 - spec.a * y) * (1.0 - spec.b * y) * (1.0 - spec.c * y) * (1.0 - spec.d * y) /
           ((1.0 - y2) * (1.0 - q * y2));
}

Cplx laurentAt(const std::vector<Cplx>& coeffs, int n, Cplx y) {
    Cplx acc{0.0, 0.0};
    for (size_t k = 0; k < coeffs.size(); ++k) acc += coeffs[k] * ipow(y, static_cast<int>(k) - n);
    return acc;
}

/// Move y off the poles of xi(y) and xi(1/y): y^2 near 1, q, or 1/q.
bool nearPole(Cplx y, Cplx q) {
    Cplx y2 = y * y;
    double band = 0.05 * std::max(1.0, std::abs(q));
    return std::abs(y2 - 1.0) < band || std::abs(y2 - q) < band || std::abs(y2 * q - 1.0) < band;
}

Cplx awOperatorApply(const AWSpec& spec, Cplx q, const std::vector<Cplx>& coeffs, Cplx y) {
    Cplx abcd = spec.a * spec.b * spec.c * spec.d;
    Cplx py = laurentAt(coeffs, spec.n, y);
    Cplx xiP = awXi(spec, q, y);
    Cplx xiM = awXi(spec, q, 1.0 / y);
    return xiP * (laurentAt(coeffs, spec.n, q * y) - py) +
           xiM * (laurentAt(coeffs, spec.n, y / q) - py) + (1.0 + abcd / q) * py;
}

}  // namespace

AWOperatorReport awOperatorCheck(const AWSpec& spec, Cplx q) {
    std::vector<Cplx> coeffs = awPolynomial(spec, q);
    int n = spec.n;

    AWOperatorReport report;
    report.resampledGridPoints = 0;

    // Laurent symmetry P(y) = P(1/y): coefficients are palindromic.
    double top = 0.0;
    for (Cplx c : coeffs) top = std::max(top, std::abs(c));
    double sym = 0.0;
    for (int k = 0; k <= 2 * n; ++k)
        sym = std::max(sym, std::abs(coeffs[static_cast<size_t>(k)] -
                                     coeffs[static_cast<size_t>(2 * n - k)]));
    report.symmetryResidual = sym / std::max(1.0, top);

    // Eigenvalue from one regular point, then proportionality on a grid.
    Cplx y0 = std::polar(1.31, 0.83);
    while (nearPole(y0, q) || std::abs(laurentAt(coeffs, n, y0)) < 1e-8 * std::max(1.0, top))
        y0 *= Cplx{1.023, 0.017};
    report.lambda = awOperatorApply(spec, q, coeffs, y0) / laurentAt(coeffs, n, y0);

    double worst = 0.0;
    for (int g = 0; g < 12; ++g) {
        Cplx y = std::polar(1.15, 0.21 + 2.0 * std::numbers::pi * g / 12.0);
        int guard = 0;
        while (nearPole(y, q) && guard++ < 40) {
            y *= Cplx{1.017, 0.011};
            ++report.resampledGridPoints;
        }
        Cplx lhs = awOperatorApply(spec, q, coeffs, y);
        Cplx rhs = report.lambda * laurentAt(coeffs, n, y);
        double scale = std::max(1.0, std::abs(lhs) + std::abs(rhs));
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    report.proportionalityResidual = worst;

    // Zeros of y^n P(y): 2n roots paired under y -> 1/y; keep the outer n.
    std::vector<Cplx> zeros = polyRoots(coeffs, kTolEig);
    std::sort(zeros.begin(), zeros.end(),
              [](Cplx a, Cplx b) { return std::abs(a) > std::abs(b); });
    zeros.resize(static_cast<size_t>(n));

    report.zeroSystemResiduals.resize(zeros.size());
    for (size_t k = 0; k < zeros.size(); ++k) {
        bool close = false;
        for (size_t l = 0; l < zeros.size(); ++l)
            if (l != k && std::abs(zeros[k] - zeros[l]) <
                              10.0 * kTolEig * std::max(1.0, std::abs(zeros[k])))
                close = true;
        if (close) {
            report.zeroSystemResiduals[k] = std::nullopt;
            continue;
        }
        Cplx yk = zeros[k];
        Cplx lhs = (yk - spec.a) * (yk - spec.b) * (yk - spec.c) * (yk - spec.d);
        Cplx rhs = (spec.a * yk - 1.0) * (spec.b * yk - 1.0) * (spec.c * yk - 1.0) *
                   (spec.d * yk - 1.0);
        for (size_t l = 0; l < zeros.size(); ++l) {
            if (l == k) continue;
            lhs *= (yk - q * zeros[l]) * (yk * zeros[l] - q);
            rhs *= (q * yk - zeros[l]) * (q * yk * zeros[l] - 1.0);
        }
        double denom = std::abs(lhs) + std::abs(rhs);
        report.zeroSystemResiduals[k] =
            denom == 0.0 ? std::optional<double>{} : std::abs(lhs - rhs) / denom;
    }
    return report;
}

double awCombinedOperatorResidual(const AWSpec& spec, Cplx q, Cplx kt, Cplx kts) {
    std::vector<Cplx> coeffs = awPolynomial(spec, q);
    int n = spec.n;

    double worst = 0.0;
    for (int g = 0; g < 12; ++g) {
        Cplx y = std::polar(1.27, 0.53 + 2.0 * std::numbers::pi * g / 12.0);
        int guard = 0;
        while (nearPole(y, q) && guard++ < 40) y *= Cplx{1.017, 0.011};

        Cplx py = laurentAt(coeffs, n, y);
        Cplx xiP = awXi(spec, q, y);
        Cplx xiM = awXi(spec, q, 1.0 / y);
        Cplx mult = y + 1.0 / y;

        Cplx lhs = kts * xiP * laurentAt(coeffs, n, q * y) +
                   kts * xiM * laurentAt(coeffs, n, y / q) -
                   (kts * (xiP + xiM) - kt * mult - 2.0 * kts) * py;
        Cplx rhs = kt * mult * py + kts * awOperatorApply(spec, q, coeffs, y);
        double scale = std::max(1.0, std::abs(lhs) + std::abs(rhs));
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
    return worst;
}

}  // namespace qtri
