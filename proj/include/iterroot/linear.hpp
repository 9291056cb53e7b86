#pragma once

#include <vector>

#include "iterroot/poly.hpp"

namespace iterroot {

/// Closed-form n-th iterate of z -> az + b:
/// f^n(z) = a^n z + (a^{n-1} + ... + a + 1) b.
template <class K>
LinearMap<K> linear_iterate_closed(const K& a, const K& b, unsigned n) {
    K an = FieldTraits<K>::one();
    K sum = FieldTraits<K>::zero();  // 1 + a + ... + a^{n-1}
    for (unsigned i = 0; i < n; ++i) {
        sum += an;
        an = an * a;
    }
    return {an, sum * b};
}

/// One iterative root cz + d of az + b, annotated with the least order
/// r' >= 1 at which it already reproduces the input.
template <class K>
struct LinearRootEntry {
    LinearMap<K> map;
    unsigned minimal_order;
};

/// Infinite family f(z) = c z + d, d free: arises for g = identity when c is
/// a nontrivial root of unity with c^r = 1 (every member satisfies f^r = g).
template <class K>
struct LinearFamily {
    K c;
    unsigned minimal_order;  // = order of c
};

enum class LinearKind { none, finite, parametric_reflection };

template <class K>
struct LinearRootFamily {
    LinearKind kind = LinearKind::none;
    std::vector<LinearRootEntry<K>> roots;
    std::vector<LinearFamily<K>> families;
    /// False when, in exact mode, some complex r-th roots of a fall outside
    /// the coefficient field.
    bool complete = true;
};

namespace detail {

/// Least r' in [1, r] with f^{r'} = g; r if none smaller matches.
template <class K>
unsigned minimal_linear_order(const K& c, const K& d, const K& a, const K& b, unsigned r,
                              const Tolerance& tol) {
    for (unsigned rp = 1; rp < r; ++rp) {
        LinearMap<K> it = linear_iterate_closed(c, d, rp);
        if (FieldTraits<K>::eq(it.a, a, tol) && FieldTraits<K>::eq(it.b, b, tol)) return rp;
    }
    return r;
}

}  // namespace detail

/// All linear solutions f of f^r = az + b (a != 0). For each r-th root c of a
/// available in the backend: with s = 1 + c + ... + c^{r-1}, the unique
/// candidate is d = b/s when s != 0; when s = 0 (so a = 1), b = 0 admits the
/// free family cz + d and b != 0 admits nothing on that branch.
template <class K>
LinearRootFamily<K> linear_root(const K& a, const K& b, unsigned r, const Tolerance& tol) {
    if (a.is_zero()) throw NotBijective();
    if (r < 2) throw InvalidDegreeSpec("root order must be >= 2");

    LinearRootFamily<K> out;
    auto cs = kth_roots(a, r);
    out.complete = cs.complete;
    for (const K& c : cs.roots) {
        K s = FieldTraits<K>::zero(), cp = FieldTraits<K>::one();
        for (unsigned i = 0; i < r; ++i) {
            s += cp;
            cp = cp * c;
        }
        bool s_zero = FieldTraits<K>::exact
                          ? s.is_zero()
                          : FieldTraits<K>::is_zero(s, tol);  // numeric roots of unity land near 0
        if (!s_zero) {
            K d = b / s;
            out.roots.push_back({{c, d}, detail::minimal_linear_order(c, d, a, b, r, tol)});
        } else if (FieldTraits<K>::is_zero(b, tol)) {
            // c has finite order dividing r; the family reproduces the
            // identity exactly at that order.
            unsigned ord = 1;
            K p = c;
            while (!FieldTraits<K>::eq(p, FieldTraits<K>::one(), tol) && ord < r) {
                p = p * c;
                ++ord;
            }
            out.families.push_back({c, ord});
        }
        // s = 0 with b != 0: no solution with this multiplier.
    }
    if (!out.families.empty())
        out.kind = LinearKind::parametric_reflection;
    else if (!out.roots.empty())
        out.kind = LinearKind::finite;
    return out;
}

}  // namespace iterroot
