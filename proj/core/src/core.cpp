#include "qtri/core.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace qtri {

Cplx qnum(int n, Cplx s) {
    if (n == 0) return {0.0, 0.0};
    Cplx den = s - 1.0 / s;
    if (std::abs(den) == 0.0) throw std::invalid_argument("qnum: s - 1/s vanishes");
    return (ipow(s, n) - ipow(s, -n)) / den;
}

Cplx ipow(Cplx base, int n) {
    if (n < 0) {
        if (std::abs(base) == 0.0) throw std::invalid_argument("ipow: zero base, negative exponent");
        return ipow(1.0 / base, -n);
    }
    Cplx result{1.0, 0.0};
    Cplx acc = base;
    for (unsigned k = static_cast<unsigned>(n); k > 0; k >>= 1) {
        if (k & 1u) result *= acc;
        if (k > 1) acc *= acc;
    }
    return result;
}

void Params::validate() const {
    if (tolId <= 0.0 || tolEig <= 0.0) throw std::invalid_argument("tolerances must be positive");
    if (std::abs(c0) < 1e-12) throw std::invalid_argument("c0 must be nonzero");
    if (classical) return;
    if (std::abs(s) < 1e-12) throw std::invalid_argument("deformation parameter s must be nonzero");
    if (std::abs(s - 1.0 / s) < 1e-6)
        throw std::invalid_argument("deformation parameter too close to s = ±1; "
                                    "use the classical branch for the undeformed structure");
}

Cplx Rng::annulus(double lo, double hi) {
    double r = real(lo, hi);
    double phi = real(0.0, 2.0 * std::numbers::pi);
    return std::polar(r, phi);
}

Cplx Rng::nearPositive(double lo, double hi, double maxPhase) {
    double r = real(lo, hi);
    double phi = real(-maxPhase, maxPhase);
    return std::polar(r, phi);
}

Cplx Rng::deformation() { return nearPositive(1.05, 1.4, 0.3); }

Cplx Rng::spectral() {
    // Keep |u| away from 1 so u - 1/u style combinations stay conditioned.
    double r = real(0.0, 1.0) < 0.5 ? real(0.8, 0.93) : real(1.08, 1.6);
    double phi = real(0.0, 2.0 * std::numbers::pi);
    return std::polar(r, phi);
}

double Rng::real(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(gen_);
}

int Rng::integer(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(gen_);
}

std::string formatCplx(Cplx z) {
    char buf[80];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.17g", z.real());
        return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

}  // namespace qtri
