#include "qtri/spin.hpp"

namespace qtri {

SpinRep buildSpinRep(int twoJ, const Params& p) {
    if (twoJ < 0) throw std::invalid_argument("buildSpinRep: negative spin");
    int dim = twoJ + 1;
    Matrix sp = Matrix::Zero(dim, dim);
    Matrix sm = Matrix::Zero(dim, dim);
    Matrix ks = Matrix::Zero(dim, dim);
    Matrix ksi = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        ks(k, k) = p.qq(2 * k - twoJ);       // s^{k-j}
        ksi(k, k) = p.qq(twoJ - 2 * k);
        if (k + 1 < dim) sp(k + 1, k) = qnum(twoJ - k, p.s);
        if (k - 1 >= 0) sm(k - 1, k) = qnum(k, p.s);
    }
    SpinRep rep;
    rep.twoJ = twoJ;
    rep.Sp = Operator({dim}, std::move(sp));
    rep.Sm = Operator({dim}, std::move(sm));
    rep.Ks = Operator({dim}, std::move(ks));
    rep.KsInv = Operator({dim}, std::move(ksi));
    return rep;
}

Operator casimir(const SpinRep& rep, const Params& p) {
    Cplx s = p.s;
    Cplx split = s - 1.0 / s;
    return s * (rep.Ks * rep.Ks) + (1.0 / s) * (rep.KsInv * rep.KsInv) +
           (split * split) * (rep.Sm * rep.Sp);
}

Cplx casimirEigenvalue(int twoJ, const Params& p) {
    return p.qq(2 * twoJ + 2) + p.qq(-2 * twoJ - 2);  // q^{j+1/2} + q^{-j-1/2}
}

ClassicalSpinRep buildClassicalSpinRep(int twoJ) {
    if (twoJ < 0) throw std::invalid_argument("buildClassicalSpinRep: negative spin");
    int dim = twoJ + 1;
    Matrix ep = Matrix::Zero(dim, dim);
    Matrix em = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        if (k + 1 < dim) ep(k + 1, k) = static_cast<double>(twoJ - k);
        if (k - 1 >= 0) em(k - 1, k) = static_cast<double>(k);
    }
    ClassicalSpinRep rep;
    rep.twoJ = twoJ;
    rep.Ep = Operator({dim}, std::move(ep));
    rep.Em = Operator({dim}, std::move(em));
    return rep;
}

}  // namespace qtri
