#include <random>

#include "iterroot/api.hpp"
#include "iterroot/io.hpp"
#include "iterroot/multipoly.hpp"
#include "iterroot/quartic.hpp"
#include "iterroot/solver.hpp"

namespace iterroot::api {

namespace {

constexpr std::size_t kMaxResultDegree = 1000000;

template <class K>
Polynomial<K> parse_poly_t(const std::string& s) {
    if constexpr (FieldTraits<K>::exact)
        return parse_poly_exact(s);
    else
        return parse_poly_approx(s);
}

template <class K>
K parse_field_t(const std::string& s) {
    if constexpr (FieldTraits<K>::exact)
        return parse_field_exact(s);
    else
        return parse_field_approx(s);
}

json base(const char* cmd, const Options& opt) {
    json j;
    j["command"] = cmd;
    j["mode"] = opt.exact ? "exact" : "approx";
    return j;
}

// ---- iterate / compose ----------------------------------------------------

template <class K>
json iterate_impl(const std::string& poly, unsigned n, const Options& opt) {
    Polynomial<K> f = parse_poly_t<K>(poly);
    if (f.degree() >= 2) {
        std::size_t d = 1;
        for (unsigned i = 0; i < n; ++i) {
            d *= f.degree();
            if (d > kMaxResultDegree) throw InvalidDegreeSpec("iterate result degree too large");
        }
    }
    Polynomial<K> h = iterate(f, n);
    json j = base("iterate", opt);
    j["n"] = n;
    j["degree"] = h.degree();
    j["result"] = poly_str(h);
    return j;
}

template <class K>
json compose_impl(const std::string& fs, const std::string& gs, const Options& opt) {
    Polynomial<K> f = parse_poly_t<K>(fs), g = parse_poly_t<K>(gs);
    if (f.degree() * g.degree() > kMaxResultDegree)
        throw InvalidDegreeSpec("composition degree too large");
    Polynomial<K> h = compose(f, g);
    json j = base("compose", opt);
    j["degree"] = h.degree();
    j["result"] = poly_str(h);
    return j;
}

// ---- quartic classification ------------------------------------------------

template <class K>
struct QuarticInput {
    Polynomial<K> original;
    QuarticCoeffs<K> coeffs;
    LinearMap<K> back;  // maps normalized roots to roots of the original
    bool normalized;
};

template <class K>
QuarticInput<K> quartic_input(const std::string& s, const Options& opt) {
    Polynomial<K> g = parse_poly_t<K>(s);
    if (g.degree() != 4) throw InvalidDegreeSpec("expected a degree-4 polynomial");
    if (auto q = QuarticCoeffs<K>::from_poly(g, opt.tol))
        return {g, *q, LinearMap<K>::identity(), false};
    auto [gn, L] = normalize(g);  // ExactRootUnavailable when impossible
    auto q = QuarticCoeffs<K>::from_poly(gn, opt.tol);
    if (!q) throw MathError("normalization did not produce a monic quartic");
    return {g, *q, L, true};
}

template <class K>
json classification_json(const char* cmd, const QuarticInput<K>& in,
                         const Classification<K>& cls, bool include_roots, const Options& opt) {
    json j = base(cmd, opt);
    j["degree"] = 4;
    j["count"] = cls.count;
    if (include_roots) {
        json roots = json::array();
        json residuals = json::array();
        for (const auto& root : cls.roots) {
            Polynomial<K> fp = root.to_poly();
            Polynomial<K> orig = in.normalized ? conjugate(fp, in.back.inverse()) : fp;
            double res = residual(orig, 2u, in.original);
            json e;
            e["unit"] = field_str(root.unit);
            e["a1"] = field_str(root.a1);
            e["a0"] = field_str(root.a0);
            e["poly"] = poly_str(orig);
            e["residual"] = res;
            roots.push_back(e);
            residuals.push_back(res);
        }
        j["roots"] = roots;
        j["residuals"] = residuals;
    }
    j["beta"] = cls.beta ? json(field_str(*cls.beta)) : json(nullptr);
    if (!opt.exact) j["uncertain"] = cls.uncertain;
    if (in.normalized) j["normalization"] = {{"a", field_str(in.back.a)}};
    return j;
}

template <class K>
json sqrt_impl(const std::string& s, const Options& opt) {
    QuarticInput<K> in = quartic_input<K>(s, opt);
    Classification<K> cls = sqrt_all(in.coeffs, opt.tol);
    return classification_json("sqrt", in, cls, true, opt);
}

template <class K>
json classify_impl(const std::string& s, const Options& opt) {
    QuarticInput<K> in = quartic_input<K>(s, opt);
    Classification<K> cls = sqrt_all(in.coeffs, opt.tol);
    return classification_json("classify", in, cls, false, opt);
}

template <class K>
json curve_impl(const std::string& beta_s, const Options& opt) {
    K beta = parse_field_t<K>(beta_s);
    QuarticCoeffs<K> point{beta, kfrac<K>(3, 8) * beta * beta,
                           kfrac<K>(1, 16) * beta * beta * beta,
                           kfrac<K>(1, 256) * beta.pow(4) + kfrac<K>(-1, 4) * beta};
    auto roots = triple_roots(beta);
    Polynomial<K> gp = point.to_poly();
    json j = base("curve", opt);
    j["beta"] = field_str(beta);
    j["point"] = poly_str(gp);
    j["degree"] = 4;
    j["count"] = 3;
    json jr = json::array();
    for (const auto& root : roots) {
        json e;
        e["unit"] = field_str(root.unit);
        e["a1"] = field_str(root.a1);
        e["a0"] = field_str(root.a0);
        e["poly"] = poly_str(root.to_poly());
        e["residual"] = residual(root.to_poly(), 2u, gp);
        jr.push_back(e);
    }
    j["roots"] = jr;
    return j;
}

// ---- solver ------------------------------------------------------------

template <class K>
void append_solve_roots(json& roots, const SolveResult<K>& res, unsigned e, unsigned r,
                        const Polynomial<K>& g) {
    for (const auto& root : res.roots) {
        json entry;
        entry["poly"] = poly_str(root.f);
        entry["e"] = e;
        entry["order"] = r;
        entry["minimal_order"] = root.minimal_order;
        entry["residual"] = residual(root.f, r, g);
        roots.push_back(entry);
    }
}

template <class K>
json solve_impl(const std::string& poly, std::optional<unsigned> deg,
                std::optional<unsigned> order, const Options& opt) {
    Polynomial<K> g = parse_poly_t<K>(poly);
    std::size_t d = g.degree();

    // Fill in a missing side of deg(f)^order = deg(g) when determined.
    std::vector<std::pair<unsigned, unsigned>> pairs;
    if (deg && order) {
        pairs.emplace_back(*deg, *order);
    } else if (!deg && !order) {
        pairs = admissible_pairs(d);
        if (d == 1) pairs.emplace_back(1, 2);  // linear g: quadratic roots by default
    } else {  // exactly one of deg/order given: filter the admissible pairs by it
        for (auto [e, r] : admissible_pairs(d))
            if ((deg && e == *deg) || (order && r == *order)) pairs.emplace_back(e, r);
        if (d == 1) {
            if (order) pairs.emplace_back(1, *order);
            else if (*deg == 1) pairs.emplace_back(1, 2);
        }
    }

    json j = base("solve", opt);
    j["degree"] = d;
    json jp = json::array();
    for (auto [e, r] : pairs) jp.push_back({e, r});
    j["pairs"] = jp;

    json roots = json::array();
    bool complete = true;
    bool any_attempted = false;
    for (auto [e, r] : pairs) {
        SolveResult<K> res = solve(g, e, r, opt.tol);
        if (res.obstruction != Obstruction::degree_mismatch) any_attempted = true;
        complete = complete && res.complete;
        append_solve_roots(roots, res, e, r, g);
    }

    Obstruction ob = Obstruction::none;
    if (roots.empty()) {
        if (pairs.empty())
            ob = is_prime(d) ? Obstruction::prime_degree : Obstruction::degree_mismatch;
        else if (!any_attempted)
            ob = Obstruction::degree_mismatch;
        else
            ob = Obstruction::residual_failure;
    }
    j["count"] = roots.size();
    j["roots"] = roots;
    json residuals = json::array();
    for (const auto& e : roots) residuals.push_back(e["residual"]);
    j["residuals"] = residuals;
    j["complete"] = complete;
    j["obstruction"] = ob == Obstruction::none ? json(nullptr) : json(obstruction_name(ob));
    return j;
}

// ---- linear ---------------------------------------------------------------

template <class K>
json linroot_impl(const std::string& as, const std::string& bs, unsigned r, const Options& opt) {
    K a = parse_field_t<K>(as), b = parse_field_t<K>(bs);
    LinearRootFamily<K> fam = linear_root(a, b, r, opt.tol);
    json j = base("linroot", opt);
    j["a"] = field_str(a);
    j["b"] = field_str(b);
    j["order"] = r;
    switch (fam.kind) {
        case LinearKind::none: j["kind"] = "none"; break;
        case LinearKind::finite: j["kind"] = "finite"; break;
        case LinearKind::parametric_reflection: j["kind"] = "parametric-reflection"; break;
    }
    j["count"] = fam.roots.size();
    json jr = json::array();
    for (const auto& entry : fam.roots) {
        json e;
        e["c"] = field_str(entry.map.a);
        e["d"] = field_str(entry.map.b);
        e["poly"] = poly_str(entry.map.to_poly());
        e["minimal_order"] = entry.minimal_order;
        jr.push_back(e);
    }
    j["roots"] = jr;
    json jf = json::array();
    for (const auto& f : fam.families) {
        json e;
        e["c"] = field_str(f.c);
        e["minimal_order"] = f.minimal_order;
        e["description"] = "f(z) = " + field_str(f.c) + "*z + d for arbitrary d";
        jf.push_back(e);
    }
    j["families"] = jf;
    j["complete"] = fam.complete;
    return j;
}

template <class K>
json normalize_impl(const std::string& poly, const Options& opt) {
    Polynomial<K> g = parse_poly_t<K>(poly);
    auto [gn, L] = normalize(g);
    json j = base("normalize", opt);
    j["input"] = poly_str(g);
    j["degree"] = g.degree();
    j["result"] = poly_str(gn);
    j["map"] = {{"a", field_str(L.a)}, {"b", field_str(L.b)}};
    return j;
}

// ---- selftest ---------------------------------------------------------------

struct RationalGen {
    std::mt19937_64 rng;
    explicit RationalGen(unsigned long long seed) : rng(seed) {}
    Rational operator()(long maxnum = 999, long maxden = 20) {
        std::uniform_int_distribution<long> num(-maxnum, maxnum), den(1, maxden);
        return make_rational(num(rng), den(rng));
    }
};

}  // namespace

json iterate_cmd(const std::string& poly, unsigned n, const Options& opt) {
    return opt.exact ? iterate_impl<Eisenstein>(poly, n, opt)
                     : iterate_impl<ApproxComplex>(poly, n, opt);
}

json compose_cmd(const std::string& f, const std::string& g, const Options& opt) {
    return opt.exact ? compose_impl<Eisenstein>(f, g, opt)
                     : compose_impl<ApproxComplex>(f, g, opt);
}

json sqrt_cmd(const std::string& quartic, const Options& opt) {
    return opt.exact ? sqrt_impl<Eisenstein>(quartic, opt)
                     : sqrt_impl<ApproxComplex>(quartic, opt);
}

json classify_cmd(const std::string& quartic, const Options& opt) {
    return opt.exact ? classify_impl<Eisenstein>(quartic, opt)
                     : classify_impl<ApproxComplex>(quartic, opt);
}

json curve_cmd(const std::string& beta, const Options& opt) {
    return opt.exact ? curve_impl<Eisenstein>(beta, opt) : curve_impl<ApproxComplex>(beta, opt);
}

json solve_cmd(const std::string& poly, std::optional<unsigned> deg, std::optional<unsigned> order,
               const Options& opt) {
    return opt.exact ? solve_impl<Eisenstein>(poly, deg, order, opt)
                     : solve_impl<ApproxComplex>(poly, deg, order, opt);
}

json linroot_cmd(const std::string& a, const std::string& b, unsigned order, const Options& opt) {
    return opt.exact ? linroot_impl<Eisenstein>(a, b, order, opt)
                     : linroot_impl<ApproxComplex>(a, b, order, opt);
}

json normalize_cmd(const std::string& poly, const Options& opt) {
    return opt.exact ? normalize_impl<Eisenstein>(poly, opt)
                     : normalize_impl<ApproxComplex>(poly, opt);
}

json verify_cmd() {
    Options opt;
    json j = base("verify", opt);
    json checks = json::array();
    auto add = [&checks](const std::string& name, bool pass) {
        checks.push_back({{"name", name}, {"pass", pass}});
    };
    bool ok = true;
    bool s = verify_surface_identities();
    ok = ok && s;
    add("surface-identities", s);
    const Eisenstein units[] = {Eisenstein(1), Eisenstein::omega(), Eisenstein::omega_sq()};
    const char* names[] = {"second-iterate-unit-1", "second-iterate-unit-w",
                           "second-iterate-unit-w^2"};
    for (int i = 0; i < 3; ++i) {
        bool p = verify_second_iterate(units[i]);
        ok = ok && p;
        add(names[i], p);
    }
    json mut = json::array();
    for (std::size_t i = 0; i < mutation_count(); ++i) {
        bool flips = !verify_with_mutation(i);
        ok = ok && flips;
        mut.push_back({{"description", mutation_description(i)}, {"flips", flips}});
    }
    j["checks"] = checks;
    j["mutations"] = mut;
    j["ok"] = ok;
    return j;
}

json selftest_cmd(const Options& opt) {
    json j = base("selftest", opt);
    j["seed"] = opt.seed;
    RationalGen gen(opt.seed);
    json checks = json::array();
    bool ok = true;
    auto add = [&checks, &ok](const std::string& name, bool pass, int samples) {
        checks.push_back({{"name", name}, {"pass", pass}, {"samples", samples}});
        ok = ok && pass;
    };
    using P = Polynomial<Eisenstein>;
    constexpr int N = 100;

    bool pass = true;
    for (int i = 0; i < N && pass; ++i) {
        Eisenstein a1{gen()}, a0{gen()};
        P f(std::vector<Eisenstein>{a0, a1, Eisenstein(1)});
        pass = phi(a1, a0).to_poly() == iterate(f, 2);
    }
    add("second-iterate-map-matches-composition", pass, N);

    pass = true;
    for (int i = 0; i < N && pass; ++i) {
        P f(std::vector<Eisenstein>{Eisenstein{gen()}, Eisenstein{gen()}, Eisenstein{gen(9, 3)}});
        if (f.degree() < 2) continue;
        pass = iterate(f, 3) == compose(iterate(f, 1), iterate(f, 2));
    }
    add("iteration-semigroup-law", pass, N);

    pass = true;
    for (int i = 0; i < N && pass; ++i) {
        std::vector<Eisenstein> c;
        for (int k = 0; k < 5; ++k) c.emplace_back(gen(), gen(99, 7));
        P p(std::move(c));
        pass = parse_poly_exact(poly_str(p)) == p;
    }
    add("printer-parser-round-trip", pass, N);

    pass = true;
    for (int i = 0; i < N && pass; ++i) {
        Eisenstein a{gen(20, 5)}, b{gen(20, 5)};
        unsigned n = static_cast<unsigned>(i % 7);
        auto lm = linear_iterate_closed(a, b, n);
        pass = lm.to_poly() == iterate(P(std::vector<Eisenstein>{b, a}), n);
    }
    add("linear-closed-form-iterate", pass, N);

    j["checks"] = checks;
    j["ok"] = ok;
    return j;
}

bool has_obstruction(const json& result) {
    auto it = result.find("obstruction");
    return it != result.end() && !it->is_null();
}

namespace {

std::string root_lines(const json& roots) {
    std::string out;
    for (const auto& e : roots) {
        out += "  " + e["poly"].get<std::string>();
        if (e.contains("minimal_order"))
            out += "  (minimal order " + std::to_string(e["minimal_order"].get<unsigned>()) + ")";
        out += "\n";
    }
    return out;
}

}  // namespace

std::string render_text(const json& j) {
    const std::string cmd = j["command"];
    std::string out;
    auto line = [&out](const std::string& s) { out += s + "\n"; };

    if (cmd == "iterate" || cmd == "compose" || cmd == "normalize") {
        line("degree: " + std::to_string(j["degree"].get<std::size_t>()));
        line("result: " + j["result"].get<std::string>());
        if (j.contains("map"))
            line("map: a = " + j["map"]["a"].get<std::string>() +
                 ", b = " + j["map"]["b"].get<std::string>());
    } else if (cmd == "sqrt" || cmd == "classify") {
        line("count: " + std::to_string(j["count"].get<int>()));
        if (j.contains("roots") && !j["roots"].empty()) {
            line("roots:");
            out += root_lines(j["roots"]);
        }
        if (!j["beta"].is_null()) line("beta: " + j["beta"].get<std::string>());
        if (j.value("uncertain", false)) line("warning: residuals near tolerance; classification uncertain");
        if (j.contains("normalization"))
            line("normalized via a = " + j["normalization"]["a"].get<std::string>());
    } else if (cmd == "curve") {
        line("beta: " + j["beta"].get<std::string>());
        line("point: " + j["point"].get<std::string>());
        line("roots:");
        out += root_lines(j["roots"]);
    } else if (cmd == "solve") {
        line("degree: " + std::to_string(j["degree"].get<std::size_t>()));
        line("count: " + std::to_string(j["count"].get<std::size_t>()));
        if (!j["roots"].empty()) {
            line("roots:");
            for (const auto& e : j["roots"])
                line("  " + e["poly"].get<std::string>() + "  (degree " +
                     std::to_string(e["e"].get<unsigned>()) + ", order " +
                     std::to_string(e["order"].get<unsigned>()) + ")");
        }
        line(std::string("complete: ") + (j["complete"].get<bool>() ? "yes" : "no"));
        if (!j["obstruction"].is_null()) line("obstruction: " + j["obstruction"].get<std::string>());
    } else if (cmd == "linroot") {
        line("kind: " + j["kind"].get<std::string>());
        if (!j["roots"].empty()) {
            line("roots:");
            out += root_lines(j["roots"]);
        }
        for (const auto& f : j["families"])
            line("family: " + f["description"].get<std::string>() + "  (minimal order " +
                 std::to_string(f["minimal_order"].get<unsigned>()) + ")");
        line(std::string("complete: ") + (j["complete"].get<bool>() ? "yes" : "no"));
    } else if (cmd == "verify") {
        for (const auto& c : j["checks"])
            line(c["name"].get<std::string>() + ": " +
                 (c["pass"].get<bool>() ? "ok" : "FAILED"));
        std::size_t flips = 0;
        for (const auto& m : j["mutations"]) flips += m["flips"].get<bool>() ? 1 : 0;
        line("mutations flipped: " + std::to_string(flips) + "/" +
             std::to_string(j["mutations"].size()));
        line(std::string("ok: ") + (j["ok"].get<bool>() ? "yes" : "no"));
    } else if (cmd == "selftest") {
        for (const auto& c : j["checks"])
            line(c["name"].get<std::string>() + ": " +
                 (c["pass"].get<bool>() ? "ok" : "FAILED"));
        line(std::string("ok: ") + (j["ok"].get<bool>() ? "yes" : "no"));
    } else {
        out = j.dump(2) + "\n";
    }
    return out;
}

}  // namespace iterroot::api
