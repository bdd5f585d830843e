#include "qtri/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtri {

Cplx evalLaurent(const LaurentScalar& p, Cplx u) {
    Cplx acc{0.0, 0.0};
    for (const auto& [deg, c] : p) acc += c * ipow(u, deg);
    return acc;
}

void LaurentOperator::add(int degree, const Operator& coeff) {
    if (dims_.empty()) dims_ = coeff.dims;
    if (coeff.dims != dims_)
        throw std::invalid_argument("LaurentOperator::add: mismatched site dimensions");
    auto it = terms_.find(degree);
    if (it == terms_.end())
        terms_.emplace(degree, coeff);
    else
        it->second += coeff;
}

const Operator* LaurentOperator::coeff(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? nullptr : &it->second;
}

Operator LaurentOperator::coeffOrZero(int degree) const {
    const Operator* c = coeff(degree);
    return c ? *c : Operator::zero(dims_);
}

Operator LaurentOperator::eval(Cplx u) const {
    Operator acc = Operator::zero(dims_);
    for (const auto& [deg, op] : terms_) acc += ipow(u, deg) * op;
    return acc;
}

LaurentOperator& LaurentOperator::operator+=(const LaurentOperator& o) {
    for (const auto& [deg, op] : o.terms_) add(deg, op);
    return *this;
}

LaurentOperator& LaurentOperator::operator-=(const LaurentOperator& o) {
    for (const auto& [deg, op] : o.terms_) add(deg, -op);
    return *this;
}

LaurentOperator& LaurentOperator::operator*=(Cplx scale) {
    for (auto& [deg, op] : terms_) op *= scale;
    return *this;
}

LaurentOperator LaurentOperator::product(const LaurentOperator& o) const {
    LaurentOperator result(dims_);
    for (const auto& [da, a] : terms_)
        for (const auto& [db, b] : o.terms_) result.add(da + db, a * b);
    return result;
}

LaurentOperator LaurentOperator::scalarProduct(const LaurentScalar& p) const {
    LaurentOperator result(dims_);
    for (const auto& [da, a] : terms_)
        for (const auto& [db, c] : p) result.add(da + db, c * a);
    return result;
}

void LaurentOperator::prune(double relTol) {
    double top = maxCoeffNorm();
    if (top == 0.0) {
        terms_.clear();
        return;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.norm() <= relTol * top)
            it = terms_.erase(it);
        else
            ++it;
    }
}

int LaurentOperator::minDegree() const {
    if (terms_.empty()) throw std::logic_error("LaurentOperator::minDegree: empty polynomial");
    return terms_.begin()->first;
}

int LaurentOperator::maxDegree() const {
    if (terms_.empty()) throw std::logic_error("LaurentOperator::maxDegree: empty polynomial");
    return terms_.rbegin()->first;
}

double LaurentOperator::maxCoeffNorm() const {
    double top = 0.0;
    for (const auto& [deg, op] : terms_) top = std::max(top, op.norm());
    return top;
}

LaurentOperator operator+(LaurentOperator a, const LaurentOperator& b) { return a += b; }
LaurentOperator operator-(LaurentOperator a, const LaurentOperator& b) { return a -= b; }

AuxLaurent::AuxLaurent(std::vector<int> d) : dims(std::move(d)) {
    for (auto& entry : e) entry = LaurentOperator(dims);
}

AuxLaurent AuxLaurent::product(const AuxLaurent& o) const {
    if (dims != o.dims) throw std::invalid_argument("AuxLaurent::product: mismatched dimensions");
    AuxLaurent result(dims);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) result.at(i, j) += at(i, k).product(o.at(k, j));
    return result;
}

std::array<Operator, 4> AuxLaurent::eval(Cplx u) const {
    return {e[0].eval(u), e[1].eval(u), e[2].eval(u), e[3].eval(u)};
}

void AuxLaurent::prune(double relTol) {
    // Entries are pruned against the largest coefficient of the whole matrix,
    // so exact zeros in one entry are not kept alive by their own round-off.
    double top = 0.0;
    for (const auto& entry : e) top = std::max(top, entry.maxCoeffNorm());
    if (top == 0.0) return;
    for (auto& entry : e) {
        double own = entry.maxCoeffNorm();
        if (own > 0.0) entry.prune(relTol * top / own);
    }
}

int AuxLaurent::minDegree() const {
    bool any = false;
    int m = 0;
    for (const auto& entry : e) {
        if (entry.empty()) continue;
        m = any ? std::min(m, entry.minDegree()) : entry.minDegree();
        any = true;
    }
    if (!any) throw std::logic_error("AuxLaurent::minDegree: empty matrix");
    return m;
}

int AuxLaurent::maxDegree() const {
    bool any = false;
    int m = 0;
    for (const auto& entry : e) {
        if (entry.empty()) continue;
        m = any ? std::max(m, entry.maxDegree()) : entry.maxDegree();
        any = true;
    }
    if (!any) throw std::logic_error("AuxLaurent::maxDegree: empty matrix");
    return m;
}

}  // namespace qtri
