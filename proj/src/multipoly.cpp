#include <algorithm>
#include <iterator>
#include <numeric>

#include "iterroot/multipoly.hpp"

namespace iterroot {

void MultiPoly::check_same_vars(const MultiPoly& o) const {
    if (vars_ != o.vars_) throw VariableMismatch("operands use different variable lists");
}

void MultiPoly::insert_term(const Exponents& e, const Eisenstein& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, Eisenstein c) {
    MultiPoly p(std::move(vars));
    p.insert_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, std::size_t index) {
    MultiPoly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e.at(index) = 1;
    p.insert_term(e, Eisenstein(1));
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_vars(b);
    MultiPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insert_term(e, ca * cb);
        }
    return r;
}

MultiPoly operator*(const Eisenstein& s, const MultiPoly& p) {
    MultiPoly r(p.vars_);
    for (const auto& [e, c] : p.terms_) r.insert_term(e, s * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly acc = constant(vars_, Eisenstein(1));
    for (unsigned i = 0; i < n; ++i) acc = acc * *this;
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != vars_.size())
        throw VariableMismatch("one image per substituted variable required");
    for (const auto& im : images) images.front().check_same_vars(im);
    MultiPoly r(images.front().vars());
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(r.vars_, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = t * images[i].pow(e[i]);
        r += t;
    }
    return r;
}

Eisenstein MultiPoly::evaluate(const std::vector<Eisenstein>& point) const {
    if (point.size() != vars_.size())
        throw VariableMismatch("one value per variable required");
    Eisenstein acc(0);
    for (const auto& [e, c] : terms_) {
        Eisenstein t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= point[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponents, Eisenstein>> ts(terms_.begin(), terms_.end());
    // graded-lex, highest first
    std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
        unsigned dx = std::accumulate(x.first.begin(), x.first.end(), 0u);
        unsigned dy = std::accumulate(y.first.begin(), y.first.end(), 0u);
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    std::string out;
    for (const auto& [e, c] : ts) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        bool rational = c.is_rational();
        std::string cs;
        if (!rational)
            cs = "(" + c.str() + ")";
        else if (mono.empty() || !(c == Eisenstein(1) || c == Eisenstein(-1)))
            cs = abs(c.rational_part()) == c.rational_part() ? c.str() : (-c).str();
        bool negative = rational && c.rational_part() < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (!cs.empty() && !mono.empty())
            out += cs + "*" + mono;
        else
            out += cs.empty() ? mono : cs;
    }
    return out;
}

namespace {

const std::vector<std::string> kVarsB = {"b3", "b2", "b1", "b0"};
const std::vector<std::string> kVarsA = {"a1", "a0"};

MultiPoly bconst(long n) { return MultiPoly::constant(kVarsB, Eisenstein(n)); }

// The four coefficient polynomials of (z^2 + a1 z + a0)^2 in (a1, a0).
std::vector<MultiPoly> phi_images() {
    MultiPoly a1 = MultiPoly::variable(kVarsA, 0), a0 = MultiPoly::variable(kVarsA, 1);
    MultiPoly two = MultiPoly::constant(kVarsA, Eisenstein(2));
    return {two * a1,                      // b3
            two * a0 + a1 * a1 + a1,       // b2
            two * a1 * a0 + a1 * a1,       // b1
            a0 * a0 + a1 * a0 + a0};       // b0
}

struct SurfaceCoeffs {
    long e1_b3sq = -12, e1_b2sq = 16, e1_b0 = -64;
    long e2_b2b3 = -4, e2_b1 = 8;
};

bool surface_check(const SurfaceCoeffs& sc) {
    MultiPoly b3 = MultiPoly::variable(kVarsB, 0), b2 = MultiPoly::variable(kVarsB, 1);
    MultiPoly b1 = MultiPoly::variable(kVarsB, 2), b0 = MultiPoly::variable(kVarsB, 3);
    MultiPoly e1 = b3.pow(4) + bconst(-8) * b2 * b3 * b3 + bconst(sc.e1_b3sq) * b3 * b3 +
                   bconst(sc.e1_b2sq) * b2 * b2 + bconst(32) * b2 + bconst(-16) * b3 +
                   bconst(sc.e1_b0) * b0;
    MultiPoly e2 = b3.pow(3) + bconst(sc.e2_b2b3) * b2 * b3 + bconst(sc.e2_b1) * b1;
    auto images = phi_images();
    return e1.substitute(images).is_zero() && e2.substitute(images).is_zero();
}

struct IterateCoeffs {
    long z3 = 2;        // coefficient of u^2 b1 in [z^3]
    long z2_b1lin = 1;  // coefficient of u b1 in [z^2]
    long c_b0lin = 1;   // coefficient of b0 in [z^0]
};

// Functional square of u z^2 + b1 z + b0 with b1, b0 formal, compared
// coefficient-by-coefficient against the closed forms.
bool second_iterate_check(const Eisenstein& u, const IterateCoeffs& ic) {
    const std::vector<std::string> vars = {"b1", "b0"};
    MultiPoly b1 = MultiPoly::variable(vars, 0), b0 = MultiPoly::variable(vars, 1);
    auto cnum = [&vars](const Eisenstein& c) { return MultiPoly::constant(vars, c); };
    MultiPoly uc = cnum(u);

    // f as a coefficient vector in z, then f(f) by direct expansion.
    std::vector<MultiPoly> f = {b0, b1, uc};
    auto mul = [](const std::vector<MultiPoly>& x, const std::vector<MultiPoly>& y) {
        std::vector<MultiPoly> r(x.size() + y.size() - 1, MultiPoly(x.front().vars()));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
        return r;
    };
    std::vector<MultiPoly> ff = mul(f, f);
    std::vector<MultiPoly> h(5, MultiPoly(vars));
    for (std::size_t i = 0; i < ff.size(); ++i) h[i] += uc * ff[i];
    for (std::size_t i = 0; i < f.size(); ++i) h[i] += b1 * f[i];
    h[0] += b0;

    Eisenstein u2 = u * u;
    std::vector<MultiPoly> expected = {
        uc * b0 * b0 + b0 * b1 + cnum(Eisenstein(ic.c_b0lin)) * b0,
        cnum(Eisenstein(2) * u) * b0 * b1 + b1 * b1,
        cnum(Eisenstein(2) * u2) * b0 + uc * b1 * b1 + cnum(Eisenstein(ic.z2_b1lin) * u) * b1,
        cnum(Eisenstein(ic.z3) * u2) * b1,
        cnum(u.pow(3)),
    };
    for (std::size_t i = 0; i < 5; ++i)
        if (h[i] != expected[i]) return false;
    return true;
}

struct Mutation {
    const char* what;
    bool (*run)();
};

const Mutation kMutations[] = {
    {"first surface equation: b0 coefficient -64 -> -63",
     [] {
         SurfaceCoeffs sc;
         sc.e1_b0 = -63;
         return surface_check(sc);
     }},
    {"first surface equation: b2^2 coefficient 16 -> 15",
     [] {
         SurfaceCoeffs sc;
         sc.e1_b2sq = 15;
         return surface_check(sc);
     }},
    {"first surface equation: b3^2 coefficient -12 -> -11",
     [] {
         SurfaceCoeffs sc;
         sc.e1_b3sq = -11;
         return surface_check(sc);
     }},
    {"second surface equation: b1 coefficient 8 -> 7",
     [] {
         SurfaceCoeffs sc;
         sc.e2_b1 = 7;
         return surface_check(sc);
     }},
    {"second surface equation: b2*b3 coefficient -4 -> -3",
     [] {
         SurfaceCoeffs sc;
         sc.e2_b2b3 = -3;
         return surface_check(sc);
     }},
    {"second iterate (unit w): z^3 coefficient 2 -> 3",
     [] {
         IterateCoeffs ic;
         ic.z3 = 3;
         return second_iterate_check(Eisenstein::omega(), ic);
     }},
    {"second iterate (unit w): linear b1 part of z^2 coefficient 1 -> 2",
     [] {
         IterateCoeffs ic;
         ic.z2_b1lin = 2;
         return second_iterate_check(Eisenstein::omega(), ic);
     }},
    {"second iterate (unit w^2): linear b0 part of constant coefficient 1 -> 2",
     [] {
         IterateCoeffs ic;
         ic.c_b0lin = 2;
         return second_iterate_check(Eisenstein::omega_sq(), ic);
     }},
};

}  // namespace

bool verify_surface_identities() { return surface_check(SurfaceCoeffs{}); }

bool verify_second_iterate(const Eisenstein& unit) {
    if (!unit.pow(3).is_one()) throw NotCubeRootOfUnity();
    return second_iterate_check(unit, IterateCoeffs{});
}

std::size_t mutation_count() { return std::size(kMutations); }

bool verify_with_mutation(std::size_t index) {
    return kMutations[index].run();
}

std::string mutation_description(std::size_t index) {
    return kMutations[index].what;
}

}  // namespace iterroot
