#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qtri/core.hpp"

namespace qtri {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Dense operator on an ordered tensor product of finite-dimensional site
/// spaces. dims lists the site dimensions with the *leftmost tensor factor
/// first*; the matrix is stored in the corresponding row-major Kronecker
/// convention, so kron(a, b) has a as the leftmost (most significant) factor.
struct Operator {
    std::vector<int> dims;
    Matrix mat;

    Operator() = default;
    Operator(std::vector<int> d, Matrix m);

    int side() const { return static_cast<int>(mat.rows()); }
    double norm() const { return mat.norm(); }

    static Operator identity(const std::vector<int>& dims);
    static Operator zero(const std::vector<int>& dims);

    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);
    Operator& operator*=(Cplx scale);
};

Operator operator+(Operator a, const Operator& b);
Operator operator-(Operator a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(Cplx scale, Operator a);
Operator operator*(Operator a, Cplx scale);
Operator operator-(Operator a);

/// Kronecker product; a becomes the leftmost factor, dims are concatenated.
Operator kron(const Operator& a, const Operator& b);

/// Embed a one-site operator at position `site` (0-based) of a chain with the
/// given site dimensions, acting as the identity elsewhere.
Operator tensorEmbed(const Operator& siteOp, int site, const std::vector<int>& dims);

Operator commutator(const Operator& x, const Operator& y);

/// Deformed commutator [x, y]_s = s·xy − s⁻¹·yx.
Operator qCommutator(const Operator& x, const Operator& y, Cplx s);

/// ||lhs − rhs||_F / max(1, ||lhs||_F, ||rhs||_F).
double relResidual(const Operator& lhs, const Operator& rhs);

/// ||residual||_F / max(1, scale).
double relResidual(const Operator& residual, double scale);

/// ||[x, y]||_F / max(1, ||x||_F · ||y||_F) — the natural scale for products.
double commutatorResidual(const Operator& x, const Operator& y);

/// How far an operator is from a multiple of the identity:
/// returns {residual, fitted multiple}.
struct IdentityFit {
    Cplx factor;
    double relResidual;
};
IdentityFit fitIdentityMultiple(const Operator& op);

int dimsProduct(const std::vector<int>& dims);

}  // namespace qtri
