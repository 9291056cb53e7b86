#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "iterroot/api.hpp"
#include "iterroot/cli.hpp"

namespace iterroot {

namespace {

struct GlobalFlags {
    std::string mode = "exact";
    double tol = 1e-9;
    bool json_out = false;
    unsigned long long seed = 1;

    api::Options options() const {
        api::Options opt;
        opt.exact = (mode == "exact");
        opt.tol = Tolerance{tol, tol * 1e-3};
        opt.seed = seed;
        return opt;
    }
};

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"iterative roots of complex polynomials"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--mode", g.mode, "coefficient arithmetic backend")
        ->check(CLI::IsMember({"exact", "approx"}))
        ->capture_default_str();
    app.add_option("--tol", g.tol, "relative tolerance used by the approx backend")
        ->capture_default_str();
    app.add_flag("--json", g.json_out, "print the result as a JSON record");
    app.add_option("--seed", g.seed, "seed for randomized self-tests")->capture_default_str();

    api::json result;

    auto* iterate = app.add_subcommand("iterate", "compose a polynomial with itself n times");
    std::string it_poly;
    unsigned it_n = 0;
    iterate->add_option("poly", it_poly, "polynomial in z")->required();
    iterate->add_option("n", it_n, "iteration count")->required();
    iterate->callback([&] { result = api::iterate_cmd(it_poly, it_n, g.options()); });

    auto* compose = app.add_subcommand("compose", "compose two polynomials f(g(z))");
    std::string co_f, co_g;
    compose->add_option("f", co_f)->required();
    compose->add_option("g", co_g)->required();
    compose->callback([&] { result = api::compose_cmd(co_f, co_g, g.options()); });

    auto* sqrt_sc = app.add_subcommand("sqrt", "find quadratic f with f(f(z)) equal to a quartic");
    std::string sq_poly;
    sqrt_sc->add_option("quartic", sq_poly)->required();
    sqrt_sc->callback([&] { result = api::sqrt_cmd(sq_poly, g.options()); });

    auto* classify = app.add_subcommand("classify", "count quadratic square roots of a quartic");
    std::string cl_poly;
    classify->add_option("quartic", cl_poly)->required();
    classify->callback([&] { result = api::classify_cmd(cl_poly, g.options()); });

    auto* curve = app.add_subcommand("curve", "quartic with three square roots for a parameter");
    std::string cu_beta;
    curve->add_option("beta", cu_beta)->required();
    curve->callback([&] { result = api::curve_cmd(cu_beta, g.options()); });

    auto* solve = app.add_subcommand("solve", "find f with r-fold self-composition equal to g");
    std::string so_poly;
    unsigned so_deg = 0, so_order = 0;
    solve->add_option("poly", so_poly)->required();
    auto* deg_opt = solve->add_option("--deg", so_deg, "degree of the root to search for");
    auto* ord_opt = solve->add_option("--order", so_order, "iteration order r");
    solve->callback([&] {
        std::optional<unsigned> deg, order;
        if (deg_opt->count()) deg = so_deg;
        if (ord_opt->count()) order = so_order;
        result = api::solve_cmd(so_poly, deg, order, g.options());
    });

    auto* linroot = app.add_subcommand("linroot", "roots of a degree-1 map under iteration");
    std::string lr_a, lr_b;
    unsigned lr_order = 2;
    linroot->add_option("a", lr_a, "slope of az+b")->required();
    linroot->add_option("b", lr_b, "offset of az+b")->required();
    linroot->add_option("--order", lr_order, "iteration order r")->capture_default_str();
    linroot->callback([&] { result = api::linroot_cmd(lr_a, lr_b, lr_order, g.options()); });

    auto* normalize = app.add_subcommand("normalize", "conjugate to a monic polynomial");
    std::string no_poly;
    normalize->add_option("poly", no_poly)->required();
    normalize->callback([&] { result = api::normalize_cmd(no_poly, g.options()); });

    auto* verify = app.add_subcommand("verify", "re-derive the built-in symbolic identities");
    verify->callback([&] { result = api::verify_cmd(); });

    auto* selftest = app.add_subcommand("selftest", "randomized consistency checks");
    selftest->callback([&] { result = api::selftest_cmd(g.options()); });

    for (auto* sc : {iterate, compose, sqrt_sc, classify, curve, solve, linroot, normalize,
                     verify, selftest})
        sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }

    if (g.json_out)
        std::cout << result.dump(2) << "\n";
    else
        std::cout << api::render_text(result);

    if (api::has_obstruction(result)) return 3;
    if (result.contains("ok") && !result["ok"].get<bool>()) return 3;
    return 0;
}

}  // namespace iterroot
