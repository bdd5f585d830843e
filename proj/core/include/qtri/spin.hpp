#pragma once

#include "qtri/operator.hpp"

namespace qtri {

/// Spin-j irreducible representation of U_{q^{1/2}}(sl2) on the monomial
/// basis {z^0, ..., z^{2j}} (dimension 2j+1, j stored as twoJ = 2j):
///   Ks  = q^{s3/2}:  z^k -> s^{k-j} z^k
///   Sp:  z^k -> [2j-k]_s z^{k+1}
///   Sm:  z^k -> [k]_s z^{k-1}
/// with [n]_s the s-integer. s3 has spectrum {-j, ..., j}.
struct SpinRep {
    int twoJ = 0;
    Operator Sp, Sm, Ks, KsInv;

    int dim() const { return twoJ + 1; }
};

SpinRep buildSpinRep(int twoJ, const Params& p);

/// Central element s·q^{s3} + s⁻¹·q^{−s3} + (s−s⁻¹)²·Sm·Sp. On the spin-j
/// irrep it is the scalar q^{j+1/2} + q^{−j−1/2}; the normalization is fixed
/// by the j = 1/2 case, where that scalar is q + q⁻¹.
Operator casimir(const SpinRep& rep, const Params& p);
Cplx casimirEigenvalue(int twoJ, const Params& p);

/// Classical (q = 1) spin matrices on the same monomial basis:
///   Ep: z^k -> (2j-k) z^{k+1},   Em: z^k -> k z^{k-1}.
struct ClassicalSpinRep {
    int twoJ = 0;
    Operator Ep, Em;
};
ClassicalSpinRep buildClassicalSpinRep(int twoJ);

}  // namespace qtri
