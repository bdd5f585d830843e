#include "qtri/affine.hpp"

#include <algorithm>

namespace qtri {

std::vector<int> ChainSpec::dims() const {
    std::vector<int> d;
    d.reserve(sites.size());
    for (const Site& site : sites) d.push_back(site.twoJ + 1);
    return d;
}

bool ChainSpec::homogeneous(double tol) const {
    if (sites.empty()) return true;
    for (const Site& site : sites) {
        if (site.twoJ != sites[0].twoJ) return false;
        if (std::abs(site.v - sites[0].v) > tol * std::max(1.0, std::abs(sites[0].v)))
            return false;
    }
    return true;
}

AffineGens evaluationHom(int twoJ, Cplx v, const Params& p) {
    if (std::abs(v) < 1e-12) throw std::invalid_argument("evaluationHom: v must be nonzero");
    SpinRep rep = buildSpinRep(twoJ, p);
    AffineGens g;
    g.dims = {twoJ + 1};
    g.Qp = v * (rep.Sp * rep.Ks);
    g.Qm = v * (rep.Sm * rep.KsInv);
    g.Qbp = (1.0 / v) * (rep.Sp * rep.KsInv);
    g.Qbm = (1.0 / v) * (rep.Sm * rep.Ks);
    g.qH = rep.Ks * rep.Ks;
    g.qHi = rep.KsInv * rep.KsInv;
    return g;
}

AffineGens coproduct(const AffineGens& g1, const AffineGens& g2) {
    Operator id2 = Operator::identity(g2.dims);
    AffineGens g;
    g.dims = g1.dims;
    g.dims.insert(g.dims.end(), g2.dims.begin(), g2.dims.end());
    g.Qp = kron(g1.Qp, id2) + kron(g1.qH, g2.Qp);
    g.Qm = kron(g1.Qm, id2) + kron(g1.qHi, g2.Qm);
    g.Qbp = kron(g1.Qbp, id2) + kron(g1.qHi, g2.Qbp);
    g.Qbm = kron(g1.Qbm, id2) + kron(g1.qH, g2.Qbm);
    g.qH = kron(g1.qH, g2.qH);
    g.qHi = kron(g1.qHi, g2.qHi);
    return g;
}

AffineGens coproductOpposite(const AffineGens& g1, const AffineGens& g2) {
    Operator id1 = Operator::identity(g1.dims);
    Operator id2 = Operator::identity(g2.dims);
    AffineGens g;
    g.dims = g1.dims;
    g.dims.insert(g.dims.end(), g2.dims.begin(), g2.dims.end());
    g.Qp = kron(id1, g2.Qp) + kron(g1.Qp, g2.qH);
    g.Qm = kron(id1, g2.Qm) + kron(g1.Qm, g2.qHi);
    g.Qbp = kron(id1, g2.Qbp) + kron(g1.Qbp, g2.qHi);
    g.Qbm = kron(id1, g2.Qbm) + kron(g1.Qbm, g2.qH);
    g.qH = kron(g1.qH, g2.qH);
    g.qHi = kron(g1.qHi, g2.qHi);
    return g;
}

AffineGens nCoproduct(const ChainSpec& chain, const Params& p, bool opposite) {
    if (chain.sites.empty()) throw std::invalid_argument("nCoproduct: empty chain");
    AffineGens g = evaluationHom(chain.sites[0].twoJ, chain.sites[0].v, p);
    for (int i = 1; i < chain.size(); ++i) {
        AffineGens next = evaluationHom(chain.sites[static_cast<size_t>(i)].twoJ,
                                        chain.sites[static_cast<size_t>(i)].v, p);
        g = opposite ? coproductOpposite(g, next) : coproduct(g, next);
    }
    return g;
}

double RelationReport::max() const {
    double m = 0.0;
    for (const auto& [name, r] : residuals) m = std::max(m, r);
    return m;
}

namespace {

double serreResidual(const Operator& x, const Operator& y, Cplx q) {
    Cplx w = 1.0 + q + 1.0 / q;
    Operator x2 = x * x;
    Operator x3 = x2 * x;
    Operator lhs = x3 * y - w * (x2 * y * x) + w * (x * y * x2) - y * x3;
    double xn = x.norm();
    double scale = std::max(1.0, xn * xn * xn * y.norm());
    return lhs.norm() / scale;
}

}  // namespace

RelationReport checkAffineRelations(const AffineGens& g, const Params& p) {
    Cplx s = p.s;
    Cplx q = p.q();
    Cplx split = s - 1.0 / s;
    Operator id = Operator::identity(g.dims);

    RelationReport report;
    auto push = [&](const std::string& name, double r) { report.residuals.emplace_back(name, r); };

    // Null mixed relations: s^{-1} Q± Q̄± − s Q̄± Q± = 0.
    {
        Operator lhs = (1.0 / s) * (g.Qp * g.Qbp) - s * (g.Qbp * g.Qp);
        push("mixed-plus-null", lhs.norm() / std::max(1.0, g.Qp.norm() * g.Qbp.norm()));
    }
    {
        Operator lhs = (1.0 / s) * (g.Qm * g.Qbm) - s * (g.Qbm * g.Qm);
        push("mixed-minus-null", lhs.norm() / std::max(1.0, g.Qm.norm() * g.Qbm.norm()));
    }

    // Cartan-valued mixed relations:
    //   s Q+ Q̄- − s^{-1} Q̄- Q+ = (q^{2H} − 1)/(s − s^{-1})
    //   s Q- Q̄+ − s^{-1} Q̄+ Q- = (q^{-2H} − 1)/(s − s^{-1})
    {
        Operator lhs = s * (g.Qp * g.Qbm) - (1.0 / s) * (g.Qbm * g.Qp);
        Operator rhs = (1.0 / split) * (g.qH * g.qH - id);
        push("mixed-cartan-plus", relResidual(lhs, rhs));
    }
    {
        Operator lhs = s * (g.Qm * g.Qbp) - (1.0 / s) * (g.Qbp * g.Qm);
        Operator rhs = (1.0 / split) * (g.qHi * g.qHi - id);
        push("mixed-cartan-minus", relResidual(lhs, rhs));
    }

    // Conjugation weights: q^H X q^{-H} = q^{±1} X.
    push("weight-plus", relResidual(g.qH * g.Qp * g.qHi, q * g.Qp));
    push("weight-minus", relResidual(g.qH * g.Qm * g.qHi, (1.0 / q) * g.Qm));
    push("weight-bar-plus", relResidual(g.qH * g.Qbp * g.qHi, q * g.Qbp));
    push("weight-bar-minus", relResidual(g.qH * g.Qbm * g.qHi, (1.0 / q) * g.Qbm));
    push("cartan-inverse", relResidual(g.qH * g.qHi, id));

    // Cubic Serre-type relations.
    push("serre-plus-minus", serreResidual(g.Qp, g.Qm, q));
    push("serre-minus-plus", serreResidual(g.Qm, g.Qp, q));
    push("serre-bar-plus-minus", serreResidual(g.Qbp, g.Qbm, q));
    push("serre-bar-minus-plus", serreResidual(g.Qbm, g.Qbp, q));
    return report;
}

double casimirResidual(int twoJ, const Params& p) {
    SpinRep rep = buildSpinRep(twoJ, p);
    Operator c = casimir(rep, p);
    Cplx expected = casimirEigenvalue(twoJ, p);
    return relResidual(c, expected * Operator::identity(c.dims));
}

}  // namespace qtri
