#include <cassert>
#include <utility>

#include "iterroot/field.hpp"

// Exact k-th roots in Q(w).
//
// Strategy: factor k and take p-th roots one prime at a time. For prime p and
// target X scaled into Z[w] (the ring of integers, so every field root scales
// into it), a root w with w^p = X must satisfy
//     N(w)^p = N(X)          (norm is multiplicative)
//     w^p + conj(w)^p = T(X) (trace of both sides)
// so N(w) is forced, and the trace t = T(w) is an integer root of the monic
// degree-p integer polynomial u_p(t) - T(X), where u_j = w^j + conj(w)^j obeys
// the Lucas-style recurrence u_{j+1} = t*u_j - N(w)*u_{j-1}. Recovering w from
// (t, N(w)) is a two-candidate reconstruction, checked by exact powering.
// Integer roots of the trace polynomial come from Sturm-chain isolation, so
// the whole pipeline is exact: no floating point, no integer factorization.

namespace iterroot {

namespace {

using QPoly = std::vector<Rational>;  // ascending coefficients

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
    return d;
}

// Divides every coefficient by |leading|; sign pattern is unchanged.
void scale_to_signed_monic(QPoly& p) {
    trim(p);
    if (p.empty()) return;
    Rational lc = abs(p.back());
    for (auto& c : p) c /= lc;
}

// Remainder of a by b (deg b >= 0, b nonzero).
QPoly rem(QPoly a, const QPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

QPoly qpoly_gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = rem(a, b);
        scale_to_signed_monic(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

QPoly divexact(const QPoly& a, const QPoly& b) {
    QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    QPoly r = a;
    trim(r);
    while (r.size() >= b.size() && !r.empty()) {
        Rational f = r.back() / b.back();
        std::size_t off = r.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) r[off + i] -= f * b[i];
        r.pop_back();
        trim(r);
    }
    trim(q);
    return q;
}

int sign_at(const QPoly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return sgn(acc);
}

struct SturmChain {
    std::vector<QPoly> seq;

    // Sign variations at x, zeros skipped. With a squarefree head this makes
    // count(a, b] = vars(a) - vars(b) correct even when an endpoint is a root.
    int vars(const Rational& x) const {
        int v = 0, prev = 0;
        for (const auto& p : seq) {
            int s = sign_at(p, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }
    int count(const Rational& a, const Rational& b) const { return vars(a) - vars(b); }
};

SturmChain build_sturm(const QPoly& squarefree) {
    SturmChain c;
    c.seq.push_back(squarefree);
    QPoly d = derivative(squarefree);
    trim(d);
    while (!d.empty()) {
        c.seq.push_back(d);
        QPoly r = rem(c.seq[c.seq.size() - 2], d);
        for (auto& x : r) x = -x;
        scale_to_signed_monic(r);
        d = std::move(r);
    }
    return c;
}

mpz_class eval_z(const std::vector<mpz_class>& p, const mpz_class& x) {
    mpz_class acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

mpz_class floor_q(const Rational& x) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return f;
}

}  // namespace

namespace detail {

std::vector<mpz_class> integer_roots(const std::vector<mpz_class>& ascending) {
    std::vector<mpz_class> original = ascending;
    while (!original.empty() && original.back() == 0) original.pop_back();
    if (original.size() <= 1) return {};  // constant (callers never pass the zero polynomial)

    QPoly p;
    p.reserve(original.size());
    for (const auto& c : original) p.emplace_back(c);
    QPoly g = qpoly_gcd(p, derivative(p));
    QPoly sf = g.size() > 1 ? divexact(p, g) : p;
    scale_to_signed_monic(sf);
    SturmChain chain = build_sturm(sf);

    // Cauchy bound: all roots lie strictly inside (-B, B).
    Rational bound(1);
    for (std::size_t i = 0; i + 1 < sf.size(); ++i) {
        Rational m = abs(sf[i]) / abs(sf.back());
        if (m > bound) bound = m;
    }
    mpz_class b_int = floor_q(bound) + 2;

    std::vector<mpz_class> roots;
    std::vector<std::pair<Rational, Rational>> work;  // half-open (lo, hi]
    work.emplace_back(Rational(-b_int), Rational(b_int));
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        if (chain.count(lo, hi) == 0) continue;
        if (hi - lo <= 1) {
            // An interval of length <= 1 holds at most one integer.
            mpz_class n = floor_q(hi);
            if (Rational(n) > lo && eval_z(original, n) == 0) roots.push_back(n);
            continue;
        }
        Rational mid = (lo + hi) / 2;
        work.emplace_back(lo, mid);
        work.emplace_back(mid, hi);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace detail

namespace {

std::vector<std::pair<unsigned long, unsigned>> factorize(unsigned long k) {
    std::vector<std::pair<unsigned long, unsigned>> fs;
    for (unsigned long d = 2; d * d <= k; ++d) {
        if (k % d) continue;
        unsigned e = 0;
        while (k % d == 0) {
            k /= d;
            ++e;
        }
        fs.emplace_back(d, e);
    }
    if (k > 1) fs.emplace_back(k, 1);
    return fs;
}

// All z in Q(w) with z^p = y, for prime p and y != 0.
std::vector<Eisenstein> prime_roots(const Eisenstein& y, unsigned long p) {
    // Scale so the target lies in Z[w]; any field root of the scaled target
    // is an algebraic integer, hence also in Z[w].
    mpz_class lam = lcm(y.rational_part().get_den(), y.omega_part().get_den());
    mpz_class lam_p;
    mpz_pow_ui(lam_p.get_mpz_t(), lam.get_mpz_t(), p);
    Rational xp_r = Rational(lam_p) * y.rational_part();
    Rational xq_r = Rational(lam_p) * y.omega_part();
    assert(xp_r.get_den() == 1 && xq_r.get_den() == 1);
    mpz_class xp = xp_r.get_num(), xq = xq_r.get_num();
    Eisenstein X{Rational(xp), Rational(xq)};

    mpz_class nx = xp * xp - xp * xq + xq * xq;  // N(X) >= 0
    mpz_class n0;
    if (!mpz_root(n0.get_mpz_t(), nx.get_mpz_t(), p)) return {};
    mpz_class tx = 2 * xp - xq;  // T(X)

    // u_j(t) with u_0 = 2, u_1 = t, u_{j+1} = t*u_j - n0*u_{j-1}; then the
    // trace of a root is an integer root of u_p(t) - T(X).
    std::vector<mpz_class> prev{2}, cur{0, 1};
    for (unsigned long j = 1; j < p; ++j) {
        std::vector<mpz_class> next(cur.size() + 1, mpz_class(0));
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= n0 * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    cur[0] -= tx;

    std::vector<Eisenstein> out;
    for (const mpz_class& t : detail::integer_roots(cur)) {
        // From trace t and norm n0: 3*q^2 = 4*n0 - t^2, p = (t + q)/2.
        mpz_class m = 4 * n0 - t * t;
        if (m < 0 || m % 3 != 0) continue;
        mpz_class s2 = m / 3, s;
        if (!mpz_root(s.get_mpz_t(), s2.get_mpz_t(), 2)) continue;
        for (int sign = 0; sign < (s == 0 ? 1 : 2); ++sign) {
            mpz_class qw = sign ? mpz_class(-s) : s;
            mpz_class num = t + qw;
            if (num % 2 != 0) continue;
            Eisenstein w{Rational(mpz_class(num / 2)), Rational(qw)};
            if (w.pow(p) == X) {
                Rational rp(w.rational_part().get_num(), lam);
                Rational rq(w.omega_part().get_num(), lam);
                rp.canonicalize();
                rq.canonicalize();
                out.emplace_back(rp, rq);
            }
        }
    }
    return out;
}

}  // namespace

RootsResult<Eisenstein> kth_roots(const Eisenstein& x, unsigned k) {
    if (k == 0) throw InvalidDegreeSpec("root order must be >= 1");
    if (x.is_zero()) return {{Eisenstein(0)}, true};
    std::vector<Eisenstein> set{x};
    for (auto [p, e] : factorize(k)) {
        for (unsigned i = 0; i < e && !set.empty(); ++i) {
            std::vector<Eisenstein> next;
            for (const auto& y : set) {
                auto rs = prime_roots(y, p);
                next.insert(next.end(), rs.begin(), rs.end());
            }
            set = std::move(next);
        }
    }
    std::sort(set.begin(), set.end(), canonical_less);
    bool complete = set.size() == k;  // |complex k-th roots| = k for x != 0
    return {std::move(set), complete};
}

RootsResult<ApproxComplex> kth_roots(const ApproxComplex& x, unsigned k) {
    if (k == 0) throw InvalidDegreeSpec("root order must be >= 1");
    if (x.is_zero()) return {{ApproxComplex()}, true};
    double r = std::pow(std::abs(x.value()), 1.0 / k);
    double theta = std::arg(x.value());
    std::vector<ApproxComplex> roots;
    for (unsigned j = 0; j < k; ++j) {
        double a = (theta + 2 * 3.14159265358979323846 * j) / k;
        roots.emplace_back(std::complex<double>(r * std::cos(a), r * std::sin(a)));
    }
    std::sort(roots.begin(), roots.end(), FieldTraits<ApproxComplex>::less);
    return {std::move(roots), true};
}

RootsResult<Eisenstein> roots_of_unity_exact(unsigned n) {
    const Eisenstein units[] = {Eisenstein(1),          Eisenstein(-1),
                                Eisenstein::omega(),    -Eisenstein::omega(),
                                Eisenstein::omega_sq(), -Eisenstein::omega_sq()};
    std::vector<Eisenstein> out;
    for (const auto& u : units)
        if (u.pow(n).is_one()) out.push_back(u);
    std::sort(out.begin(), out.end(), canonical_less);
    bool complete = out.size() == n;
    return {std::move(out), complete};
}

RootsResult<ApproxComplex> roots_of_unity_approx(unsigned n) {
    std::vector<ApproxComplex> out;
    for (unsigned j = 0; j < n; ++j) {
        double a = 2 * 3.14159265358979323846 * j / n;
        out.emplace_back(std::complex<double>(std::cos(a), std::sin(a)));
    }
    return {std::move(out), true};
}

}  // namespace iterroot
