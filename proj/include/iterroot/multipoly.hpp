#pragma once

#include <map>
#include <string>
#include <vector>

#include "iterroot/field.hpp"

namespace iterroot {

/// Multivariate polynomial over Q(w) in a fixed, ordered variable list.
/// Terms map exponent vectors to nonzero coefficients; canonical form is
/// maintained by every operation, so equality is plain map equality.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, Eisenstein c);
    static MultiPoly variable(std::vector<std::string> vars, std::size_t index);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponents, Eisenstein>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Eisenstein& s, const MultiPoly& p);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    MultiPoly pow(unsigned n) const;

    /// Composition of polynomial maps: replaces variable i by images[i]
    /// (all images over one common variable list).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    Eisenstein evaluate(const std::vector<Eisenstein>& point) const;

    /// Graded-lexicographic, highest term first; e.g. "2*a1^2*a0 - a0 + 1".
    std::string str() const;

private:
    void insert_term(const Exponents& e, const Eisenstein& c);
    void check_same_vars(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    std::map<Exponents, Eisenstein> terms_;
};

/// Substitutes the second-iterate coefficient map (b3, b2, b1, b0 in terms of
/// a1, a0) into both implicit surface equations and checks that each result
/// is the literal zero polynomial.
bool verify_surface_identities();

/// Symbolically squares unit*z^2 + b1*z + b0 (b1, b0 formal) and compares all
/// five coefficients to their closed forms.
bool verify_second_iterate(const Eisenstein& unit);

/// Regression guard: a fixed list of single-coefficient mutations, each of
/// which must flip its verification to false.
std::size_t mutation_count();
bool verify_with_mutation(std::size_t index);
std::string mutation_description(std::size_t index);

}  // namespace iterroot
