#include <cctype>
#include <cstdlib>

#include "iterroot/io.hpp"

namespace iterroot {

namespace {

// The six exact units, printable as powers of w.
const struct {
    Eisenstein value;
    const char* text;
} kUnits[] = {
    {Eisenstein(1), "1"},           {Eisenstein(-1), "-1"},
    {Eisenstein::omega(), "w"},     {-Eisenstein::omega(), "-w"},
    {Eisenstein::omega_sq(), "w^2"}, {-Eisenstein::omega_sq(), "-w^2"},
};

const char* unit_text(const Eisenstein& x) {
    for (const auto& u : kUnits)
        if (x == u.value) return u.text;
    return nullptr;
}

template <class K>
struct Parser {
    const std::string& s;
    std::size_t i = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i); }
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool starts_factor(char c) const {
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'z') return true;
        if constexpr (FieldTraits<K>::exact)
            return c == 'w';
        else
            return c == 'i' || c == '.';
    }

    unsigned parse_uint() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected an integer exponent");
        unsigned long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + static_cast<unsigned long>(s[i] - '0');
            if (v > 1000000) fail("exponent too large");
            ++i;
        }
        return static_cast<unsigned>(v);
    }

    K parse_number() {
        if constexpr (FieldTraits<K>::exact) {
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                digits += s[i++];
            if (digits.empty()) fail("expected a number");
            mpz_class num(digits);
            skip_ws();
            if (i < s.size() && s[i] == '/') {
                std::size_t slash = i++;
                skip_ws();
                std::string den;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    den += s[i++];
                if (den.empty()) fail("expected a denominator");
                mpz_class d(den);
                if (d == 0) throw ParseError("denominator is zero", slash);
                Rational r(num, d);
                r.canonicalize();
                return FieldTraits<K>::from_rational(r);
            }
            return FieldTraits<K>::from_rational(Rational(num));
        } else {
            const char* begin = s.c_str() + i;
            char* end = nullptr;
            double v = std::strtod(begin, &end);
            if (end == begin) fail("expected a number");
            i += static_cast<std::size_t>(end - begin);
            return K(v);
        }
    }

    Polynomial<K> parse_factor() {
        skip_ws();
        if (i >= s.size()) fail("expected a value");
        char c = s[i];
        Polynomial<K> base;
        if (c == '(') {
            ++i;
            base = parse_expr();
            if (peek() != ')') fail("expected ')'");
            ++i;
        } else if (c == 'z') {
            ++i;
            base = Polynomial<K>::identity();
        } else if (FieldTraits<K>::exact && c == 'w') {
            ++i;
            base = Polynomial<K>::constant(FieldTraits<K>::omega());
        } else if (!FieldTraits<K>::exact && c == 'i') {
            ++i;
            if constexpr (!FieldTraits<K>::exact)
                base = Polynomial<K>::constant(K(0.0, 1.0));
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            base = Polynomial<K>::constant(parse_number());
        } else {
            fail("unexpected character");
        }
        if (peek() == '^') {
            ++i;
            unsigned n = parse_uint();
            Polynomial<K> acc = Polynomial<K>::constant(FieldTraits<K>::one());
            for (unsigned j = 0; j < n; ++j) acc = acc * base;
            base = std::move(acc);
        }
        return base;
    }

    Polynomial<K> parse_term() {
        bool negative = false;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                if (c == '-') negative = !negative;
                ++i;
            } else {
                break;
            }
        }
        Polynomial<K> p = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++i;
                p = p * parse_factor();
            } else if (starts_factor(c)) {
                p = p * parse_factor();  // juxtaposition, e.g. "3/2z^2"
            } else {
                break;
            }
        }
        return negative ? -p : p;
    }

    Polynomial<K> parse_expr() {
        Polynomial<K> p = parse_term();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') break;
            // leave the sign for parse_term to consume
            p += parse_term();
        }
        return p;
    }

    Polynomial<K> parse_all() {
        skip_ws();
        if (i >= s.size()) fail("empty input");
        Polynomial<K> p = parse_expr();
        if (peek() != '\0') fail("unexpected trailing input");
        return p;
    }
};

template <class K>
K parse_constant(const std::string& s, std::size_t offset) {
    Parser<K> p{s};
    Polynomial<K> poly;
    try {
        poly = p.parse_all();
    } catch (const ParseError& e) {
        throw ParseError(e.what(), offset + e.position);
    }
    if (!poly.is_constant())
        throw ParseError("expected a constant, found 'z'", offset);
    return poly.coeff(0);
}

template <class K>
Polynomial<K> parse_polynomial(const std::string& s) {
    // A top-level comma selects the coefficient-list form (highest first).
    int depth = 0;
    bool has_comma = false;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) has_comma = true;
    }
    if (!has_comma) return Parser<K>{s}.parse_all();

    std::vector<K> descending;
    std::size_t start = 0;
    depth = 0;
    for (std::size_t j = 0; j <= s.size(); ++j) {
        if (j < s.size() && s[j] == '(') ++depth;
        if (j < s.size() && s[j] == ')') --depth;
        if (j == s.size() || (s[j] == ',' && depth == 0)) {
            descending.push_back(parse_constant<K>(s.substr(start, j - start), start));
            start = j + 1;
        }
    }
    std::vector<K> ascending(descending.rbegin(), descending.rend());
    return Polynomial<K>(std::move(ascending));
}

// One printed term: sign split out so terms join with bare +/-.
struct TermText {
    bool negative;
    std::string body;  // coefficient part, without sign, "" when coefficient is +-1
};

TermText coeff_text(const Eisenstein& c, bool has_var) {
    if (const char* u = unit_text(c)) {
        std::string t = u;
        bool neg = t[0] == '-';
        if (neg) t.erase(0, 1);
        if (t == "1") return {neg, has_var ? "" : "1"};
        return {neg, has_var ? t + "*" : t};
    }
    if (c.is_rational()) {
        bool neg = c.rational_part() < 0;
        return {neg, to_string(neg ? -c.rational_part() : c.rational_part())};
    }
    return {false, "(" + c.str() + ")"};
}

TermText coeff_text(const ApproxComplex& c, bool has_var) {
    if (c.imag() == 0.0) {
        bool neg = c.real() < 0;
        ApproxComplex a = neg ? -c : c;
        if (has_var && a.is_one()) return {neg, ""};
        return {neg, a.str()};
    }
    return {false, "(" + c.str() + ")"};
}

template <class K>
std::string poly_str_impl(const Polynomial<K>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        K c = p.coeff(k);
        if (c.is_zero()) continue;
        TermText t = coeff_text(c, k > 0);
        std::string var = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
        if (out.empty())
            out += t.negative ? "-" : "";
        else
            out += t.negative ? "-" : "+";
        out += t.body + var;
    }
    return out;
}

}  // namespace

std::string field_str(const Eisenstein& x) {
    if (const char* u = unit_text(x)) return u;
    return x.str();
}

std::string field_str(const ApproxComplex& x) { return x.str(); }

std::string poly_str(const Polynomial<Eisenstein>& p) { return poly_str_impl(p); }
std::string poly_str(const Polynomial<ApproxComplex>& p) { return poly_str_impl(p); }

Eisenstein parse_field_exact(const std::string& s) { return parse_constant<Eisenstein>(s, 0); }
ApproxComplex parse_field_approx(const std::string& s) {
    return parse_constant<ApproxComplex>(s, 0);
}
Polynomial<Eisenstein> parse_poly_exact(const std::string& s) {
    return parse_polynomial<Eisenstein>(s);
}
Polynomial<ApproxComplex> parse_poly_approx(const std::string& s) {
    return parse_polynomial<ApproxComplex>(s);
}

}  // namespace iterroot
