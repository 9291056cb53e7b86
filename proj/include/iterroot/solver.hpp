#pragma once

#include <optional>
#include <vector>

#include "iterroot/linear.hpp"
#include "iterroot/poly.hpp"

// Generic iterative-root solver: find every f of degree e with f^r = g, by
// matching coefficients of the expanded iterate from the top down. The
// coefficient of z^(e^r - k) in f^r is affine in the single unknown a_{e-k}
// once the higher coefficients are fixed (each use of a lower coefficient
// costs more degree than k allows), so each step is one linear solve; the
// remaining e^r - e coefficients are pure consistency checks.

namespace iterroot {

enum class Obstruction { none, degree_mismatch, prime_degree, residual_failure };

inline const char* obstruction_name(Obstruction o) {
    switch (o) {
        case Obstruction::degree_mismatch: return "degree-mismatch";
        case Obstruction::prime_degree: return "prime-degree";
        case Obstruction::residual_failure: return "residual-failure";
        default: return "none";
    }
}

template <class K>
struct SolvedRoot {
    Polynomial<K> f;
    unsigned minimal_order;  // least r' >= 1 with f^{r'} = g
};

template <class K>
struct SolveResult {
    std::vector<SolvedRoot<K>> roots;
    /// False when exact mode lacked some leading-coefficient branch (or a
    /// parametric linear family was found but cannot be enumerated).
    bool complete = true;
    Obstruction obstruction = Obstruction::none;
};

inline bool is_prime(std::size_t d) {
    if (d < 2) return false;
    for (std::size_t p = 2; p * p <= d; ++p)
        if (d % p == 0) return false;
    return true;
}

/// All (e, r) with e >= 2, r >= 2 and e^r = d, ascending in e. Empty for
/// primes (e^r is always composite) and for non-perfect-powers.
inline std::vector<std::pair<unsigned, unsigned>> admissible_pairs(std::size_t d) {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (std::size_t e = 2; e * e <= d; ++e) {
        std::size_t pw = e * e;
        unsigned r = 2;
        while (pw < d && pw <= d / e) {
            pw *= e;
            ++r;
        }
        if (pw == d) out.emplace_back(static_cast<unsigned>(e), r);
    }
    return out;
}

/// Max over coefficients of |coeff(f^r) - coeff(g)| under the numeric
/// embedding; exactly 0 for the exact backend iff f^r = g.
template <class K>
double residual(const Polynomial<K>& f, unsigned r, const Polynomial<K>& g) {
    Polynomial<K> h = iterate(f, r);
    if (h == g) return 0.0;
    double m = 0.0;
    std::size_t n = std::max(h.coeffs().size(), g.coeffs().size());
    for (std::size_t i = 0; i < n; ++i)
        m = std::max(m, std::abs(h.coeff(i).embed() - g.coeff(i).embed()));
    return m;
}

template <class K>
SolveResult<K> solve(const Polynomial<K>& g, unsigned e, unsigned r, const Tolerance& tol) {
    if (e == 0) throw InvalidDegreeSpec("degree e must be >= 1");
    if (r < 2) throw InvalidDegreeSpec("order r must be >= 2");
    if (g.degree() < 1 || g.is_zero()) throw DegreeZero();

    SolveResult<K> out;

    if (e == 1) {
        if (g.degree() != 1) {
            out.obstruction = Obstruction::degree_mismatch;
            return out;
        }
        auto lr = linear_root(g.coeff(1), g.coeff(0), r, tol);
        for (const auto& entry : lr.roots)
            out.roots.push_back({entry.map.to_poly(), entry.minimal_order});
        // A parametric family is infinitely many roots; listing none of them
        // leaves the enumeration incomplete.
        out.complete = lr.complete && lr.families.empty();
        if (out.roots.empty() && lr.families.empty() && lr.complete)
            out.obstruction = Obstruction::residual_failure;
        return out;
    }

    // e^r with overflow guard (dense degree-e^r polynomials get built below).
    unsigned long long big = 1;
    for (unsigned i = 0; i < r; ++i) {
        big *= e;
        if (big > 1000000ULL) throw InvalidDegreeSpec("degree e^r is too large");
    }
    std::size_t E = static_cast<std::size_t>(big);
    if (g.degree() != E) {
        out.obstruction = Obstruction::degree_mismatch;
        return out;
    }

    // Leading coefficients: lc(f^r) = c^M with M = e^(r-1) + ... + e + 1.
    unsigned M = static_cast<unsigned>((E - 1) / (e - 1));
    auto cs = kth_roots(g.leading(), M);
    out.complete = cs.complete;
    if (FieldTraits<K>::exact && cs.roots.empty())
        throw NotMonic("leading coefficient has no order-" + std::to_string(M) +
                       " root in the exact field");

    for (const K& c : cs.roots) {
        std::vector<K> fc(e + 1, FieldTraits<K>::zero());
        fc[e] = c;
        for (unsigned k = 1; k <= e; ++k) {
            std::size_t i = e - k;  // unknown coefficient this step determines
            fc[i] = FieldTraits<K>::zero();
            K p0 = iterate(Polynomial<K>(fc), r).coeff(E - k);
            fc[i] = FieldTraits<K>::one();
            K p1 = iterate(Polynomial<K>(fc), r).coeff(E - k);
            K pivot = p1 - p0;  // a positive integer multiple of a power of c
            if (pivot.is_zero()) throw MathError("triangular solve hit a vanishing pivot");
            fc[i] = (g.coeff(E - k) - p0) / pivot;
        }
        Polynomial<K> f(fc);
        if (iterate(f, r).equals(g, tol))
            // For e >= 2 the order is forced: f^{r'} has degree e^{r'} != e^r
            // for every r' < r, so r is automatically minimal.
            out.roots.push_back({f, r});
    }
    if (out.roots.empty() && !cs.roots.empty()) out.obstruction = Obstruction::residual_failure;
    return out;
}

}  // namespace iterroot
