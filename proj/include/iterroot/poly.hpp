#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "iterroot/field.hpp"

namespace iterroot {

/// Univariate polynomial over the coefficient backend K (Eisenstein or
/// ApproxComplex). Dense ascending storage: coeffs()[k] is the coefficient of
/// z^k. The zero polynomial is the empty vector; nonzero constants have one
/// entry. Both have degree 0 -- is_zero() tells them apart.
template <class K>
class Polynomial {
public:
    using Traits = FieldTraits<K>;

    Polynomial() = default;
    explicit Polynomial(std::vector<K> ascending) : c_(std::move(ascending)) { trim(); }

    static Polynomial zero() { return {}; }
    static Polynomial constant(K v) { return Polynomial(std::vector<K>{std::move(v)}); }
    static Polynomial identity() { return monomial(Traits::one(), 1); }
    static Polynomial monomial(K coeff, std::size_t power) {
        std::vector<K> c(power + 1, Traits::zero());
        c[power] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    bool is_constant() const { return c_.size() <= 1; }

    K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Traits::zero(); }
    K leading() const { return c_.empty() ? Traits::zero() : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Traits::zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Traits::zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, Traits::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const K& s, const Polynomial& p) {
        Polynomial r = p;
        for (auto& x : r.c_) x = s * x;
        r.trim();
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Coefficient-wise comparison under the project tolerance policy
    /// (exact equality for the exact backend).
    bool equals(const Polynomial& o, const Tolerance& tol) const {
        std::size_t n = std::max(c_.size(), o.c_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (!Traits::eq(coeff(i), o.coeff(i), tol)) return false;
        return true;
    }

    K evaluate(const K& z) const {
        K acc = Traits::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

/// f(g(z)) by Horner substitution.
template <class K>
Polynomial<K> compose(const Polynomial<K>& f, const Polynomial<K>& g) {
    Polynomial<K> acc;
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * g + Polynomial<K>::constant(*it);
    return acc;
}

/// n-fold self-composition; f^0 is the identity map z.
template <class K>
Polynomial<K> iterate(const Polynomial<K>& f, unsigned n) {
    Polynomial<K> acc = Polynomial<K>::identity();
    for (unsigned i = 0; i < n; ++i) acc = compose(f, acc);
    return acc;
}

/// Invertible affine map L(z) = a z + b. Values with a = 0 can be represented
/// (closed-form iteration of constants), but inversion and conjugation then
/// raise InvalidLinearMap.
template <class K>
struct LinearMap {
    K a, b;

    static LinearMap identity() {
        return {FieldTraits<K>::one(), FieldTraits<K>::zero()};
    }
    bool is_identity() const { return a.is_one() && b.is_zero(); }

    LinearMap inverse() const {
        if (a.is_zero()) throw InvalidLinearMap();
        K ai = a.inverse();
        return {ai, -(ai * b)};
    }
    Polynomial<K> to_poly() const {
        return Polynomial<K>(std::vector<K>{b, a});
    }
    K apply(const K& z) const { return a * z + b; }

    friend bool operator==(const LinearMap& x, const LinearMap& y) {
        return x.a == y.a && x.b == y.b;
    }
};

/// L^{-1} o g o L. The leading coefficient transforms as lc(g) * a^(deg g - 1).
template <class K>
Polynomial<K> conjugate(const Polynomial<K>& g, const LinearMap<K>& L) {
    LinearMap<K> Li = L.inverse();  // raises InvalidLinearMap when a = 0
    return compose(Li.to_poly(), compose(g, L.to_poly()));
}

/// Conjugates g to a monic polynomial: returns (g_n, L) with
/// g_n = conjugate(g, L), L(z) = a z, and lc(g) * a^(deg g - 1) = 1.
/// Deterministic choice of a: canonically smallest admissible root.
template <class K>
std::pair<Polynomial<K>, LinearMap<K>> normalize(const Polynomial<K>& g) {
    std::size_t d = g.degree();
    if (d < 1) throw DegreeZero();
    if (g.is_monic()) return {g, LinearMap<K>::identity()};
    if (d == 1)
        // The multiplier of a degree-1 map is a conjugation invariant: no
        // choice of a can change it.
        throw ExactRootUnavailable("degree-1 leading coefficient cannot be normalized away");
    auto rr = kth_roots(g.leading().inverse(), static_cast<unsigned>(d - 1));
    if (rr.roots.empty())
        throw ExactRootUnavailable("no (deg-1)-th root of 1/leading exists in this field");
    LinearMap<K> L{rr.roots.front(), FieldTraits<K>::zero()};
    Polynomial<K> gn = conjugate(g, L);
    // Monic by construction; snap the leading coefficient so the approx
    // backend carries an exact 1.
    std::vector<K> c = gn.coeffs();
    c.back() = FieldTraits<K>::one();
    return {Polynomial<K>(std::move(c)), L};
}

}  // namespace iterroot
