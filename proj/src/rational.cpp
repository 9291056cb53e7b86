#include "iterroot/rational.hpp"

namespace iterroot {

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

// Exact integer k-th root: returns the root only when n is a perfect k-th
// power. n must be nonnegative.
std::optional<mpz_class> exact_root(const mpz_class& n, unsigned k) {
    mpz_class r;
    int is_exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!is_exact) return std::nullopt;
    return r;
}

}  // namespace

std::optional<Rational> rational_kth_root(const Rational& x, unsigned k) {
    if (k == 0) return std::nullopt;
    if (k == 1) return x;
    bool negative = x < 0;
    if (negative && k % 2 == 0) return std::nullopt;
    mpz_class num = abs(x.get_num());
    mpz_class den = x.get_den();
    auto rn = exact_root(num, k);
    if (!rn) return std::nullopt;
    auto rd = exact_root(den, k);
    if (!rd) return std::nullopt;
    Rational root(negative ? mpz_class(-*rn) : *rn, *rd);
    // num/den was already in lowest terms, so the roots are coprime too.
    return root;
}

}  // namespace iterroot
