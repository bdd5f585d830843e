#include "qtri/operator.hpp"

#include <algorithm>

namespace qtri {

int dimsProduct(const std::vector<int>& dims) {
    int p = 1;
    for (int d : dims) p *= d;
    return p;
}

Operator::Operator(std::vector<int> d, Matrix m) : dims(std::move(d)), mat(std::move(m)) {
    if (mat.rows() != mat.cols()) throw std::invalid_argument("Operator: matrix must be square");
    if (mat.rows() != dimsProduct(dims))
        throw std::invalid_argument("Operator: matrix side does not match site dimensions");
}

Operator Operator::identity(const std::vector<int>& dims) {
    int n = dimsProduct(dims);
    return Operator(dims, Matrix::Identity(n, n));
}

Operator Operator::zero(const std::vector<int>& dims) {
    int n = dimsProduct(dims);
    return Operator(dims, Matrix::Zero(n, n));
}

namespace {
void requireSameShape(const Operator& a, const Operator& b) {
    if (a.dims != b.dims) throw std::invalid_argument("Operator: mismatched site dimensions");
}
}  // namespace

Operator& Operator::operator+=(const Operator& o) {
    requireSameShape(*this, o);
    mat += o.mat;
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    requireSameShape(*this, o);
    mat -= o.mat;
    return *this;
}

Operator& Operator::operator*=(Cplx scale) {
    mat *= scale;
    return *this;
}

Operator operator+(Operator a, const Operator& b) { return a += b; }
Operator operator-(Operator a, const Operator& b) { return a -= b; }

Operator operator*(const Operator& a, const Operator& b) {
    requireSameShape(a, b);
    return Operator(a.dims, a.mat * b.mat);
}

Operator operator*(Cplx scale, Operator a) { return a *= scale; }
Operator operator*(Operator a, Cplx scale) { return a *= scale; }
Operator operator-(Operator a) { return a *= Cplx{-1.0, 0.0}; }

Operator kron(const Operator& a, const Operator& b) {
    int na = a.side();
    int nb = b.side();
    Matrix m(na * nb, na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            m.block(i * nb, j * nb, nb, nb) = a.mat(i, j) * b.mat;
    std::vector<int> dims = a.dims;
    dims.insert(dims.end(), b.dims.begin(), b.dims.end());
    return Operator(std::move(dims), std::move(m));
}

Operator tensorEmbed(const Operator& siteOp, int site, const std::vector<int>& dims) {
    if (site < 0 || site >= static_cast<int>(dims.size()))
        throw std::invalid_argument("tensorEmbed: site index out of range");
    if (siteOp.side() != dims[site])
        throw std::invalid_argument("tensorEmbed: operator does not fit the site dimension");
    int before = 1, after = 1;
    for (int i = 0; i < site; ++i) before *= dims[i];
    for (int i = site + 1; i < static_cast<int>(dims.size()); ++i) after *= dims[i];
    Operator left({before}, Matrix::Identity(before, before));
    Operator right({after}, Matrix::Identity(after, after));
    Operator mid({dims[site]}, siteOp.mat);
    Operator full = kron(kron(left, mid), right);
    return Operator(dims, std::move(full.mat));
}

Operator commutator(const Operator& x, const Operator& y) { return x * y - y * x; }

Operator qCommutator(const Operator& x, const Operator& y, Cplx s) {
    return s * (x * y) - (1.0 / s) * (y * x);
}

double relResidual(const Operator& lhs, const Operator& rhs) {
    double scale = std::max({1.0, lhs.norm(), rhs.norm()});
    return (lhs.mat - rhs.mat).norm() / scale;
}

double relResidual(const Operator& residual, double scale) {
    return residual.norm() / std::max(1.0, scale);
}

double commutatorResidual(const Operator& x, const Operator& y) {
    return commutator(x, y).norm() / std::max(1.0, x.norm() * y.norm());
}

IdentityFit fitIdentityMultiple(const Operator& op) {
    int n = op.side();
    Cplx factor = op.mat.trace() / static_cast<double>(n);
    Matrix diff = op.mat - factor * Matrix::Identity(n, n);
    return {factor, diff.norm() / std::max(1.0, op.norm())};
}

}  // namespace qtri
