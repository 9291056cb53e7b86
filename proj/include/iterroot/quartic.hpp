#pragma once

#include <array>
#include <optional>
#include <vector>

#include "iterroot/poly.hpp"

// Monic quartics z^4 + b3 z^3 + b2 z^2 + b1 z + b0 and their iterative square
// roots u z^2 + a1 z + a0 with u a cube root of unity. The second-iterate map
// sending (u, a1, a0) to the quartic's coefficients is triangular: b3
// determines a1, then b2 determines a0, and the remaining two coordinates cut
// out the membership surface for each unit. Quartics admitting all three
// units form a rational curve parametrized by beta = b3.

namespace iterroot {

template <class K>
K knum(long n) {
    return FieldTraits<K>::from_rational(Rational(n));
}
template <class K>
K kfrac(long n, long d) {
    return FieldTraits<K>::from_rational(make_rational(n, d));
}

template <class K>
struct QuarticCoeffs {
    K b3, b2, b1, b0;

    /// Reads a monic degree-4 polynomial; nullopt when the input is not one
    /// (callers may normalize and retry).
    static std::optional<QuarticCoeffs> from_poly(const Polynomial<K>& p, const Tolerance& tol) {
        if (p.degree() != 4) return std::nullopt;
        if (!FieldTraits<K>::eq(p.leading(), FieldTraits<K>::one(), tol)) return std::nullopt;
        return QuarticCoeffs{p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0)};
    }
    Polynomial<K> to_poly() const {
        return Polynomial<K>(std::vector<K>{b0, b1, b2, b3, FieldTraits<K>::one()});
    }
    friend bool operator==(const QuarticCoeffs& x, const QuarticCoeffs& y) {
        return x.b3 == y.b3 && x.b2 == y.b2 && x.b1 == y.b1 && x.b0 == y.b0;
    }
};

template <class K>
struct QuadraticRoot {
    K unit, a1, a0;  // unit z^2 + a1 z + a0, unit^3 = 1

    Polynomial<K> to_poly() const { return Polynomial<K>(std::vector<K>{a0, a1, unit}); }
    friend bool operator==(const QuadraticRoot& x, const QuadraticRoot& y) {
        return x.unit == y.unit && x.a1 == y.a1 && x.a0 == y.a0;
    }
};

template <class K>
struct Classification {
    int count = 0;  // 0, 1, or 3
    std::vector<QuadraticRoot<K>> roots;
    std::optional<K> beta;   // present exactly when count = 3
    bool uncertain = false;  // approx backend: some residual within 10x of tolerance
};

/// Coefficients of (z^2 + a1 z + a0)^2 (functional square):
/// (2 a1, 2 a0 + a1^2 + a1, 2 a1 a0 + a1^2, a0^2 + a1 a0 + a0).
template <class K>
QuarticCoeffs<K> phi(const K& a1, const K& a0) {
    K two = knum<K>(2);
    return {two * a1, two * a0 + a1 * a1 + a1, two * a1 * a0 + a1 * a1,
            a0 * a0 + a1 * a0 + a0};
}

/// Coefficients of the second iterate of u z^2 + a1 z + a0, u^3 = 1:
/// (2 u^2 a1, 2 u^2 a0 + u a1^2 + u a1, 2 u a1 a0 + a1^2, u a0^2 + a1 a0 + a0).
template <class K>
QuarticCoeffs<K> phi_twisted(const K& unit, const K& a1, const K& a0, const Tolerance& tol) {
    if (!FieldTraits<K>::eq(unit.pow(3), FieldTraits<K>::one(), tol)) throw NotCubeRootOfUnity();
    K two = knum<K>(2), u2 = unit * unit;
    return {two * u2 * a1,
            two * u2 * a0 + unit * a1 * a1 + unit * a1,
            two * unit * a1 * a0 + a1 * a1,
            unit * a0 * a0 + a1 * a0 + a0};
}

namespace detail {

struct NearVerdict {
    bool near;        // accepted as equal under tolerance
    bool borderline;  // residual within a factor 10 of the acceptance threshold
};

template <class K>
NearVerdict near_check(const K& lhs, const K& rhs, const Tolerance& tol) {
    if constexpr (FieldTraits<K>::exact) {
        return {lhs == rhs, false};
    } else {
        auto a = lhs.embed(), b = rhs.embed();
        double rho = std::abs(a - b);
        double tau = std::max(tol.abs_floor, tol.rel * std::max(std::abs(a), std::abs(b)));
        return {rho <= tau, rho > tau / 10 && rho <= 10 * tau};
    }
}

}  // namespace detail

/// Membership in the image surface of phi (unit = 1), via the two implicit
/// equations
///   b3^4 - 8 b2 b3^2 - 12 b3^2 + 16 b2^2 + 32 b2 - 16 b3 - 64 b0 = 0
///   b3^3 - 4 b2 b3 + 8 b1 = 0.
/// Approx mode tests each sum against zero at the scale of its largest term.
template <class K>
bool on_S(const QuarticCoeffs<K>& g, const Tolerance& tol) {
    const K &b3 = g.b3, &b2 = g.b2, &b1 = g.b1, &b0 = g.b0;
    K b3_2 = b3 * b3;
    std::array<K, 7> t1 = {b3_2 * b3_2,         knum<K>(-8) * b2 * b3_2, knum<K>(-12) * b3_2,
                           knum<K>(16) * b2 * b2, knum<K>(32) * b2,       knum<K>(-16) * b3,
                           knum<K>(-64) * b0};
    std::array<K, 3> t2 = {b3_2 * b3, knum<K>(-4) * b2 * b3, knum<K>(8) * b1};
    auto vanishes = [&tol](const auto& terms) {
        K sum = FieldTraits<K>::zero();
        double scale = 0.0;
        for (const auto& t : terms) {
            sum += t;
            if constexpr (!FieldTraits<K>::exact) scale = std::max(scale, std::abs(t.embed()));
        }
        if constexpr (FieldTraits<K>::exact)
            return sum.is_zero();
        else
            return tol.zero(sum.embed(), scale);
    };
    return vanishes(t1) && vanishes(t2);
}

/// Closed-form square root on S: a1 = b3/2, a0 = -b3^2/8 - b3/4 + b2/2.
template <class K>
std::optional<QuadraticRoot<K>> sqrt_closed(const QuarticCoeffs<K>& g, const Tolerance& tol) {
    if (!on_S(g, tol)) return std::nullopt;
    K a1 = kfrac<K>(1, 2) * g.b3;
    K a0 = kfrac<K>(-1, 8) * g.b3 * g.b3 + kfrac<K>(-1, 4) * g.b3 + kfrac<K>(1, 2) * g.b2;
    return QuadraticRoot<K>{FieldTraits<K>::one(), a1, a0};
}

/// The rational curve of quartics with three square roots, parametrized by
/// beta = b3: membership requires b2 = 3/8 beta^2, b1 = 1/16 beta^3,
/// b0 = 1/256 beta^4 - 1/4 beta.
template <class K>
std::optional<K> on_C(const QuarticCoeffs<K>& g, const Tolerance& tol) {
    const K& beta = g.b3;
    K b2e = kfrac<K>(3, 8) * beta * beta;
    K b1e = kfrac<K>(1, 16) * beta * beta * beta;
    K b0e = kfrac<K>(1, 256) * beta * beta * beta * beta + kfrac<K>(-1, 4) * beta;
    if (detail::near_check(g.b2, b2e, tol).near && detail::near_check(g.b1, b1e, tol).near &&
        detail::near_check(g.b0, b0e, tol).near)
        return beta;
    return std::nullopt;
}

/// The curve point at beta and its three square roots
///   f_1    =     z^2 + (beta/2) z      - (1/16) beta (beta w^2 + beta w + 4)
///   f_w    =   w z^2 + (beta/2) w z    - (1/16) beta (beta + beta w^2 + 4)
///   f_w2   = w^2 z^2 + (beta/2) w^2 z  - (1/16) beta (beta + beta w + 4).
template <class K>
std::array<QuadraticRoot<K>, 3> triple_roots(const K& beta) {
    K one = FieldTraits<K>::one(), w = FieldTraits<K>::omega();
    K w2 = w * w, four = knum<K>(4);
    K half_beta = kfrac<K>(1, 2) * beta;
    K m16 = kfrac<K>(-1, 16);
    return {QuadraticRoot<K>{one, half_beta, m16 * beta * (beta * w2 + beta * w + four)},
            QuadraticRoot<K>{w, half_beta * w, m16 * beta * (beta + beta * w2 + four)},
            QuadraticRoot<K>{w2, half_beta * w2, m16 * beta * (beta + beta * w + four)}};
}

/// Full classification: inverts the triangular second-iterate map for each
/// unit u in {1, w, w^2} (a1 from b3, a0 from b2, then b1 and b0 must match)
/// and reports 0, 1, or 3 surviving roots plus the curve parameter when all
/// three units pass.
template <class K>
Classification<K> sqrt_all(const QuarticCoeffs<K>& g, const Tolerance& tol) {
    Classification<K> out;
    K one = FieldTraits<K>::one(), w = FieldTraits<K>::omega();
    const std::array<K, 3> units = {one, w, w * w};
    for (const K& u : units) {
        K u2 = u * u;
        K inv2u2 = (knum<K>(2) * u2).inverse();
        K a1 = g.b3 * inv2u2;
        K a0 = (g.b2 - u * a1 * a1 - u * a1) * inv2u2;
        auto c1 = detail::near_check(g.b1, knum<K>(2) * u * a1 * a0 + a1 * a1, tol);
        auto c0 = detail::near_check(g.b0, u * a0 * a0 + a1 * a0 + a0, tol);
        out.uncertain = out.uncertain || c1.borderline || c0.borderline;
        if (c1.near && c0.near) out.roots.push_back({u, a1, a0});
    }
    out.count = static_cast<int>(out.roots.size());
    out.beta = on_C(g, tol);
    return out;
}

}  // namespace iterroot
