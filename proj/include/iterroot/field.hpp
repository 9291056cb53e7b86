#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iterroot/errors.hpp"
#include "iterroot/rational.hpp"

namespace iterroot {

/// Project-wide numeric comparison policy for the approximate backend:
/// relative tolerance with an absolute floor. Exact-mode code ignores it.
struct Tolerance {
    double rel = 1e-9;
    double abs_floor = 1e-12;

    bool near(std::complex<double> a, std::complex<double> b) const {
        double m = std::max(std::abs(a), std::abs(b));
        return std::abs(a - b) <= std::max(rel * m, abs_floor);
    }
    bool zero(std::complex<double> x, double scale = 0.0) const {
        return std::abs(x) <= std::max(rel * scale, abs_floor);
    }
};

/// Element of Q(w), w a primitive cube root of unity: p + q*w with
/// w^2 = -1 - w. The nontrivial field automorphism is complex conjugation.
class Eisenstein {
public:
    Eisenstein() : p_(0), q_(0) {}
    Eisenstein(long n) : p_(n), q_(0) {}  // NOLINT: implicit by design
    explicit Eisenstein(const Rational& p) : p_(p), q_(0) {}
    Eisenstein(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

    static Eisenstein omega() { return {Rational(0), Rational(1)}; }
    static Eisenstein omega_sq() { return {Rational(-1), Rational(-1)}; }
    static Eisenstein from_rational(const Rational& r) { return Eisenstein(r); }

    const Rational& rational_part() const { return p_; }
    const Rational& omega_part() const { return q_; }

    bool is_zero() const { return p_ == 0 && q_ == 0; }
    bool is_rational() const { return q_ == 0; }
    bool is_one() const { return q_ == 0 && p_ == 1; }

    Eisenstein operator-() const { return {-p_, -q_}; }
    Eisenstein& operator+=(const Eisenstein& o) {
        p_ += o.p_;
        q_ += o.q_;
        return *this;
    }
    Eisenstein& operator-=(const Eisenstein& o) {
        p_ -= o.p_;
        q_ -= o.q_;
        return *this;
    }
    Eisenstein& operator*=(const Eisenstein& o) {
        // (p+qw)(r+sw) = (pr - qs) + (ps + qr - qs)w
        Rational pr = p_ * o.p_, qs = q_ * o.q_;
        Rational ps_qr = p_ * o.q_ + q_ * o.p_;
        p_ = pr - qs;
        q_ = ps_qr - qs;
        return *this;
    }
    Eisenstein& operator/=(const Eisenstein& o) { return *this *= o.inverse(); }

    friend Eisenstein operator+(Eisenstein a, const Eisenstein& b) { return a += b; }
    friend Eisenstein operator-(Eisenstein a, const Eisenstein& b) { return a -= b; }
    friend Eisenstein operator*(Eisenstein a, const Eisenstein& b) { return a *= b; }
    friend Eisenstein operator/(Eisenstein a, const Eisenstein& b) { return a /= b; }
    friend bool operator==(const Eisenstein& a, const Eisenstein& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Eisenstein& a, const Eisenstein& b) { return !(a == b); }

    /// Complex conjugate = image under the nontrivial automorphism:
    /// conj(p + qw) = (p - q) - q*w.
    Eisenstein conj() const { return {p_ - q_, -q_}; }

    /// Field norm N(p+qw) = p^2 - pq + q^2; rational and >= 0, zero only at 0.
    Rational norm() const { return p_ * p_ - p_ * q_ + q_ * q_; }

    /// Field trace T(p+qw) = 2p - q.
    Rational trace() const { return 2 * p_ - q_; }

    Eisenstein inverse() const;
    Eisenstein pow(unsigned long n) const;

    /// True for the six roots of unity in Q(w): +-1, +-w, +-w^2.
    bool is_unit_root_of_unity() const;
    /// unit^3 == 1, i.e. one of 1, w, w^2.
    bool is_cube_root_of_unity() const { return pow(3).is_one(); }

    /// Numeric embedding with w -> (-1 + i*sqrt(3))/2.
    std::complex<double> embed() const;

    std::string str() const;

private:
    Rational p_, q_;
};

Eisenstein operator*(const Rational& r, const Eisenstein& x);

/// Deterministic total order used everywhere a root list must be canonical.
/// Values of the form r*u (r a positive rational, u a unit) sort by the unit
/// order 1 < -1 < w < -w < w^2 < -w^2, then by magnitude; everything else
/// falls back to lexicographic comparison of the (p, q) coordinates.
bool canonical_less(const Eisenstein& a, const Eisenstein& b);

/// Approximate complex coefficient. Every constructor and operation checks
/// finiteness; NaN or infinity raises NonFiniteValue.
class ApproxComplex {
public:
    ApproxComplex() : v_(0.0, 0.0) {}
    ApproxComplex(double re) : v_(re, 0.0) { check(); }  // NOLINT
    ApproxComplex(double re, double im) : v_(re, im) { check(); }
    explicit ApproxComplex(std::complex<double> v) : v_(v) { check(); }

    static ApproxComplex omega() { return ApproxComplex(-0.5, 0.8660254037844386467637231707529362); }
    static ApproxComplex from_rational(const Rational& r) { return ApproxComplex(to_double(r)); }

    std::complex<double> value() const { return v_; }
    double real() const { return v_.real(); }
    double imag() const { return v_.imag(); }

    bool is_zero() const { return v_ == std::complex<double>(0.0, 0.0); }
    bool is_one() const { return v_ == std::complex<double>(1.0, 0.0); }

    ApproxComplex operator-() const { return ApproxComplex(-v_); }
    ApproxComplex& operator+=(const ApproxComplex& o) { return set(v_ + o.v_); }
    ApproxComplex& operator-=(const ApproxComplex& o) { return set(v_ - o.v_); }
    ApproxComplex& operator*=(const ApproxComplex& o) { return set(v_ * o.v_); }
    ApproxComplex& operator/=(const ApproxComplex& o) {
        if (o.is_zero()) throw DivisionByZero();
        return set(v_ / o.v_);
    }

    friend ApproxComplex operator+(ApproxComplex a, const ApproxComplex& b) { return a += b; }
    friend ApproxComplex operator-(ApproxComplex a, const ApproxComplex& b) { return a -= b; }
    friend ApproxComplex operator*(ApproxComplex a, const ApproxComplex& b) { return a *= b; }
    friend ApproxComplex operator/(ApproxComplex a, const ApproxComplex& b) { return a /= b; }
    friend bool operator==(const ApproxComplex& a, const ApproxComplex& b) { return a.v_ == b.v_; }
    friend bool operator!=(const ApproxComplex& a, const ApproxComplex& b) { return !(a == b); }

    ApproxComplex inverse() const {
        if (is_zero()) throw DivisionByZero();
        return ApproxComplex(1.0 / v_);
    }
    ApproxComplex pow(unsigned long n) const;
    std::complex<double> embed() const { return v_; }
    std::string str() const;

private:
    void check() const {
        if (!std::isfinite(v_.real()) || !std::isfinite(v_.imag())) throw NonFiniteValue();
    }
    ApproxComplex& set(std::complex<double> v) {
        v_ = v;
        check();
        return *this;
    }
    std::complex<double> v_;
};

/// Result of a root enumeration. `complete` means the list provably contains
/// every complex solution; exact mode may return fewer (only those in Q(w)).
template <class K>
struct RootsResult {
    std::vector<K> roots;
    bool complete = true;
};

/// All n-th roots of unity available in the backend. Exact mode yields the
/// subset lying in Q(w) (all six units have order dividing 6); approx mode
/// yields all n of them.
RootsResult<Eisenstein> roots_of_unity_exact(unsigned n);
RootsResult<ApproxComplex> roots_of_unity_approx(unsigned n);

/// All k-th roots of x that lie in Q(w), exactly. The enumeration is complete
/// within the field for every k (norm/trace descent plus exact integer root
/// isolation); `complete` still reports whether the list covers all k complex
/// roots.
RootsResult<Eisenstein> kth_roots(const Eisenstein& x, unsigned k);
RootsResult<ApproxComplex> kth_roots(const ApproxComplex& x, unsigned k);

/// Backend trait bundle used by the generic polynomial algorithms.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Eisenstein> {
    static constexpr bool exact = true;
    static Eisenstein zero() { return {}; }
    static Eisenstein one() { return Eisenstein(1); }
    static Eisenstein omega() { return Eisenstein::omega(); }
    static Eisenstein from_rational(const Rational& r) { return Eisenstein(r); }
    static bool eq(const Eisenstein& a, const Eisenstein& b, const Tolerance&) { return a == b; }
    static bool is_zero(const Eisenstein& a, const Tolerance&) { return a.is_zero(); }
    static bool less(const Eisenstein& a, const Eisenstein& b) { return canonical_less(a, b); }
};

template <>
struct FieldTraits<ApproxComplex> {
    static constexpr bool exact = false;
    static ApproxComplex zero() { return {}; }
    static ApproxComplex one() { return ApproxComplex(1.0); }
    static ApproxComplex omega() { return ApproxComplex::omega(); }
    static ApproxComplex from_rational(const Rational& r) { return ApproxComplex::from_rational(r); }
    static bool eq(const ApproxComplex& a, const ApproxComplex& b, const Tolerance& t) {
        return t.near(a.value(), b.value());
    }
    static bool is_zero(const ApproxComplex& a, const Tolerance& t) {
        return t.zero(a.value());
    }
    static bool less(const ApproxComplex& a, const ApproxComplex& b) {
        double arga = std::arg(a.value()), argb = std::arg(b.value());
        if (arga < 0) arga += 2 * 3.14159265358979323846;
        if (argb < 0) argb += 2 * 3.14159265358979323846;
        if (arga != argb) return arga < argb;
        return std::abs(a.value()) < std::abs(b.value());
    }
};

namespace detail {

/// All integer roots of the integer polynomial with the given ascending
/// coefficients (need not be monic or squarefree). Sturm-chain isolation,
/// fully exact. Exposed for direct testing.
std::vector<mpz_class> integer_roots(const std::vector<mpz_class>& ascending);

}  // namespace detail

}  // namespace iterroot
