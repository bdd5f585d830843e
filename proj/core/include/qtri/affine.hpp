#pragma once

#include <string>
#include <vector>

#include "qtri/spin.hpp"

namespace qtri {

/// Images of the affine generators {Q±, Q̄±, q^{±H}} in a concrete
/// finite-dimensional representation (possibly a chain / tensor product).
struct AffineGens {
    std::vector<int> dims;
    Operator Qp, Qm, Qbp, Qbm, qH, qHi;
};

/// One chain site: spin twoJ/2 with evaluation (spectral) parameter v.
struct Site {
    int twoJ;
    Cplx v;
};

struct ChainSpec {
    std::vector<Site> sites;

    int size() const { return static_cast<int>(sites.size()); }
    std::vector<int> dims() const;
    bool homogeneous(double tol) const;  // all (twoJ, v) equal within tol
};

/// Evaluation map into the spin-twoJ/2 representation:
///   Q±  -> v^{±1}... specifically Q+ = v S+ q^{s3/2}, Q- = v S- q^{-s3/2},
///   Q̄+ = v⁻¹ S+ q^{-s3/2}, Q̄- = v⁻¹ S- q^{s3/2}, q^H = q^{s3}.
AffineGens evaluationHom(int twoJ, Cplx v, const Params& p);

/// Two-site coproduct with g1 as the leftmost tensor factor:
///   Q±  -> Q± ⊗ I + q^{±H} ⊗ Q±,
///   Q̄± -> Q̄± ⊗ I + q^{∓H} ⊗ Q̄±,
///   q^H -> q^H ⊗ q^H.
/// The opposite variant composes with the tensor-factor flip.
AffineGens coproduct(const AffineGens& g1, const AffineGens& g2);
AffineGens coproductOpposite(const AffineGens& g1, const AffineGens& g2);

/// N-fold coproduct along the chain, site 1 leftmost; `opposite` folds with
/// the flipped two-site map throughout.
AffineGens nCoproduct(const ChainSpec& chain, const Params& p, bool opposite = false);

/// Residuals of the defining relations in a concrete representation:
/// the mixed quadratic relations between Q and Q̄, the q^H conjugation
/// weights, and the four cubic Serre-type relations.
struct RelationReport {
    std::vector<std::pair<std::string, double>> residuals;
    double max() const;
};
RelationReport checkAffineRelations(const AffineGens& g, const Params& p);

/// Residual of the Casimir invariance: ||C − c(j)·I|| / max(1, |c(j)|·||I||).
double casimirResidual(int twoJ, const Params& p);

}  // namespace qtri
