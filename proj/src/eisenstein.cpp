#include <cstdio>

#include "iterroot/field.hpp"

namespace iterroot {

Eisenstein Eisenstein::inverse() const {
    Rational n = norm();
    if (n == 0) throw DivisionByZero();
    // 1/x = conj(x)/N(x)
    Eisenstein c = conj();
    return {c.p_ / n, c.q_ / n};
}

Eisenstein Eisenstein::pow(unsigned long n) const {
    Eisenstein base = *this, acc(1);
    while (n) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return acc;
}

bool Eisenstein::is_unit_root_of_unity() const {
    if (norm() != 1) return false;
    // On the norm-1 ellipse, roots of unity are exactly the six units.
    return (q_ == 0) || (p_ == 0) || (p_ == q_);
}

std::complex<double> Eisenstein::embed() const {
    static const double half_sqrt3 = 0.86602540378443864676372317075293618;
    double p = to_double(p_), q = to_double(q_);
    return {p - 0.5 * q, half_sqrt3 * q};
}

std::string Eisenstein::str() const {
    if (q_ == 0) return to_string(p_);
    std::string wpart;
    if (q_ == 1)
        wpart = "w";
    else if (q_ == -1)
        wpart = "-w";
    else
        wpart = to_string(q_) + "*w";
    if (p_ == 0) return wpart;
    if (q_ > 0) return to_string(p_) + "+" + wpart;
    return to_string(p_) + wpart;  // q_ < 0 already carries the sign
}

Eisenstein operator*(const Rational& r, const Eisenstein& x) {
    return Eisenstein(r) * x;
}

namespace {

// 0..5 for positive-rational multiples of 1, -1, w, -w, w^2, -w^2
// (in the canonical unit order), 6 for everything else.
int unit_class(const Eisenstein& x) {
    const Rational& p = x.rational_part();
    const Rational& q = x.omega_part();
    if (q == 0) return p > 0 ? 0 : 1;       // r, -r
    if (p == 0) return q > 0 ? 2 : 3;       // r*w, -r*w
    if (p == q) return p < 0 ? 4 : 5;       // r*w^2 = -r-r*w, -r*w^2 = r+r*w
    return 6;
}

}  // namespace

bool canonical_less(const Eisenstein& a, const Eisenstein& b) {
    if (a == b) return false;
    int ca = unit_class(a), cb = unit_class(b);
    if (ca != cb) return ca < cb;
    if (ca < 6) return a.norm() < b.norm();  // same ray: by magnitude
    const Rational &ap = a.rational_part(), &bp = b.rational_part();
    if (ap != bp) return ap < bp;
    return a.omega_part() < b.omega_part();
}

ApproxComplex ApproxComplex::pow(unsigned long n) const {
    ApproxComplex base = *this, acc(1.0);
    while (n) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return acc;
}

std::string ApproxComplex::str() const {
    char buf[96];
    if (v_.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", v_.real());
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", v_.real(), v_.imag());
    return buf;
}

}  // namespace iterroot
