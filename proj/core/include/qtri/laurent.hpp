#pragma once

#include <array>
#include <map>
#include <vector>

#include "qtri/operator.hpp"

namespace qtri {

/// Scalar Laurent polynomial in the spectral parameter u: degree -> coefficient.
using LaurentScalar = std::map<int, Cplx>;

Cplx evalLaurent(const LaurentScalar& p, Cplx u);

/// Operator-valued Laurent polynomial in the spectral parameter u.
/// Zero coefficients are dropped; prune() additionally removes coefficients
/// whose norm is below relTol times the largest coefficient norm (they are
/// floating-point residue of exact cancellations).
class LaurentOperator {
  public:
    LaurentOperator() = default;
    explicit LaurentOperator(std::vector<int> dims) : dims_(std::move(dims)) {}

    const std::vector<int>& dims() const { return dims_; }
    const std::map<int, Operator>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(int degree, const Operator& coeff);
    const Operator* coeff(int degree) const;       // nullptr if absent
    Operator coeffOrZero(int degree) const;

    Operator eval(Cplx u) const;
    LaurentOperator& operator+=(const LaurentOperator& o);
    LaurentOperator& operator-=(const LaurentOperator& o);
    LaurentOperator& operator*=(Cplx scale);

    /// Convolution product (this ∘ o), operator coefficients multiplied in order.
    LaurentOperator product(const LaurentOperator& o) const;

    /// Product with a scalar Laurent polynomial.
    LaurentOperator scalarProduct(const LaurentScalar& p) const;

    /// Remove coefficients with norm <= relTol * max coefficient norm.
    void prune(double relTol);

    int minDegree() const;
    int maxDegree() const;
    double maxCoeffNorm() const;

  private:
    std::vector<int> dims_;
    std::map<int, Operator> terms_;
};

LaurentOperator operator+(LaurentOperator a, const LaurentOperator& b);
LaurentOperator operator-(LaurentOperator a, const LaurentOperator& b);

/// 2x2 auxiliary-space matrix with operator-valued Laurent entries — the shape
/// of L-operators and boundary K-matrices. Entry (i, j) is row i, column j.
struct AuxLaurent {
    std::vector<int> dims;                 // quantum-space site dimensions
    std::array<LaurentOperator, 4> e;

    explicit AuxLaurent(std::vector<int> d);
    AuxLaurent() = default;

    LaurentOperator& at(int i, int j) { return e[2 * i + j]; }
    const LaurentOperator& at(int i, int j) const { return e[2 * i + j]; }

    /// Aux-matrix product: (AB)_{ij} = sum_k A_{ik} B_{kj}.
    AuxLaurent product(const AuxLaurent& o) const;

    /// Evaluate each entry at u; result indexed like `at`.
    std::array<Operator, 4> eval(Cplx u) const;

    void prune(double relTol);
    int minDegree() const;
    int maxDegree() const;
};

}  // namespace qtri
