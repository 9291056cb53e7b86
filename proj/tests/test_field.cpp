#include <algorithm>
#include <complex>

#include "doctest.h"
#include "iterroot/field.hpp"
#include "support.hpp"

using namespace iterroot;

TEST_CASE("rational helpers") {
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(5, 1)) == "5");
    CHECK(rational_kth_root(make_rational(8, 27), 3) == make_rational(2, 3));
    CHECK(rational_kth_root(Rational(-8), 3) == Rational(-2));
    CHECK(rational_kth_root(Rational(4), 2) == Rational(2));
    CHECK(!rational_kth_root(Rational(-4), 2).has_value());
    CHECK(!rational_kth_root(Rational(5), 2).has_value());
    CHECK(!rational_kth_root(Rational(1), 0).has_value());
}

TEST_CASE("omega satisfies w^2 + w + 1 = 0") {
    Eisenstein w = Eisenstein::omega();
    CHECK(w * w + w + Eisenstein(1) == Eisenstein(0));
    CHECK(w * w == Eisenstein::omega_sq());
    CHECK(w.pow(3) == Eisenstein(1));
}

TEST_CASE("field arithmetic") {
    Eisenstein a{Rational(1), Rational(2)}, b{Rational(3), Rational(4)};
    CHECK(a * b == Eisenstein{Rational(-5), Rational(2)});  // (1+2w)(3+4w)
    CHECK(a + b == Eisenstein{Rational(4), Rational(6)});
    CHECK(a - b == Eisenstein{Rational(-2), Rational(-2)});
    CHECK(a.conj() == Eisenstein{Rational(-1), Rational(-2)});
    CHECK(Eisenstein{Rational(2), Rational(1)}.norm() == Rational(3));
    CHECK(Eisenstein{Rational(2), Rational(1)}.trace() == Rational(3));
    CHECK(a.norm() == a.rational_part() * a.rational_part() -
                          a.rational_part() * a.omega_part() +
                          a.omega_part() * a.omega_part());
}

TEST_CASE("field axioms on random samples") {
    testsupport::Sampler s(42);
    for (int i = 0; i < 50; ++i) {
        Eisenstein x = s.field(), y = s.field(), z = s.field();
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK((x + y).conj() == x.conj() + y.conj());
        CHECK((x * y).conj() == x.conj() * y.conj());
        CHECK((x * y).norm() == x.norm() * y.norm());
        if (!x.is_zero()) CHECK(x * x.inverse() == Eisenstein(1));
    }
}

TEST_CASE("inverse") {
    Eisenstein x{Rational(2), Rational(1)};
    CHECK(x.inverse() == Eisenstein{make_rational(1, 3), make_rational(-1, 3)});
    CHECK_THROWS_AS(Eisenstein(0).inverse(), DivisionByZero);
}

TEST_CASE("embedding into the complex numbers is a homomorphism") {
    testsupport::Sampler s(7);
    Tolerance tol;
    std::complex<double> w = Eisenstein::omega().embed();
    CHECK(std::abs(w * w * w - 1.0) < 1e-14);
    CHECK(std::abs(w * w + w + 1.0) < 1e-14);
    for (int i = 0; i < 30; ++i) {
        Eisenstein x = s.field(), y = s.field();
        CHECK(std::abs((x * y).embed() - x.embed() * y.embed()) <
              tol.rel * (1.0 + std::abs(x.embed() * y.embed())));
        CHECK(std::abs((x + y).embed() - (x.embed() + y.embed())) <
              tol.rel * (1.0 + std::abs(x.embed() + y.embed())));
    }
}

TEST_CASE("unit roots of unity and their orders") {
    Eisenstein w = Eisenstein::omega();
    for (const Eisenstein& u :
         {Eisenstein(1), Eisenstein(-1), w, -w, w * w, -(w * w)})
        CHECK(u.is_unit_root_of_unity());
    CHECK(!Eisenstein(2).is_unit_root_of_unity());
    CHECK(!Eisenstein{Rational(1), Rational(2)}.is_unit_root_of_unity());
    CHECK(Eisenstein(1).is_cube_root_of_unity());
    CHECK(w.is_cube_root_of_unity());
    CHECK((w * w).is_cube_root_of_unity());
    CHECK(!Eisenstein(-1).is_cube_root_of_unity());
}

TEST_CASE("canonical ordering ranks the six units first") {
    Eisenstein w = Eisenstein::omega();
    std::vector<Eisenstein> units{w * w, Eisenstein(1), -w, w, Eisenstein(-1), -(w * w)};
    std::sort(units.begin(), units.end(), canonical_less);
    std::vector<Eisenstein> expect{Eisenstein(1), Eisenstein(-1), w, -w, w * w, -(w * w)};
    CHECK(units == expect);
    // positive scaling stays within a ray; smaller norm first
    CHECK(canonical_less(w, Eisenstein{Rational(0), Rational(2)}));
    CHECK(canonical_less(Eisenstein(2), w));  // rational ray before omega ray
}

TEST_CASE("integer roots of integer polynomials") {
    // (t - 3)(t + 5) = t^2 + 2t - 15
    auto r = detail::integer_roots({mpz_class(-15), mpz_class(2), mpz_class(1)});
    std::sort(r.begin(), r.end());
    CHECK(r == std::vector<mpz_class>{mpz_class(-5), mpz_class(3)});
    // t^3 - 3t + 1 has no integer (indeed no rational) roots
    CHECK(detail::integer_roots({mpz_class(1), mpz_class(-3), mpz_class(0), mpz_class(1)})
              .empty());
    // t^2 + 1 has none
    CHECK(detail::integer_roots({mpz_class(1), mpz_class(0), mpz_class(1)}).empty());
    // repeated root: (t-2)^2
    auto rr = detail::integer_roots({mpz_class(4), mpz_class(-4), mpz_class(1)});
    CHECK(rr == std::vector<mpz_class>{mpz_class(2)});
}

TEST_CASE("k-th roots in the exact field") {
    Eisenstein w = Eisenstein::omega();

    auto cube = kth_roots(Eisenstein(1), 3);
    CHECK(cube.complete);
    CHECK(cube.roots == std::vector<Eisenstein>{Eisenstein(1), w, w * w});

    auto sw = kth_roots(w, 2);
    CHECK(sw.complete);
    REQUIRE(sw.roots.size() == 2);
    for (const auto& r : sw.roots) CHECK(r * r == w);

    auto s3 = kth_roots(Eisenstein(-3), 2);
    CHECK(s3.complete);
    REQUIRE(s3.roots.size() == 2);
    // canonical order sorts non-unit-ray elements lexicographically
    CHECK(s3.roots[0] == Eisenstein{Rational(-1), Rational(-2)});
    CHECK(s3.roots[1] == Eisenstein{Rational(1), Rational(2)});
    for (const auto& r : s3.roots) CHECK(r * r == Eisenstein(-3));

    auto i4 = kth_roots(Eisenstein(1), 4);  // i and -i are missing from Q(w)
    CHECK(!i4.complete);
    CHECK(i4.roots == std::vector<Eisenstein>{Eisenstein(1), Eisenstein(-1)});

    auto s64 = kth_roots(Eisenstein(64), 6);
    CHECK(s64.complete);
    CHECK(s64.roots.size() == 6);
    for (const auto& r : s64.roots) CHECK(r.pow(6) == Eisenstein(64));

    auto quarter = kth_roots(Eisenstein{make_rational(1, 4), Rational(0)}, 2);
    CHECK(quarter.complete);
    REQUIRE(quarter.roots.size() == 2);
    CHECK(quarter.roots[0] == Eisenstein{make_rational(1, 2), Rational(0)});

    CHECK(kth_roots(Eisenstein(0), 5).roots == std::vector<Eisenstein>{Eisenstein(0)});
    CHECK(kth_roots(Eisenstein(2), 2).roots.empty());
    CHECK_THROWS_AS(kth_roots(Eisenstein(1), 0), InvalidDegreeSpec);
}

TEST_CASE("k-th root results are closed under verification on random inputs") {
    testsupport::Sampler s(11);
    for (int i = 0; i < 40; ++i) {
        Eisenstein x = s.nonzero_field(9, 4);
        for (unsigned k : {2u, 3u}) {
            Eisenstein p = x.pow(k);
            auto rr = kth_roots(p, k);
            bool found = false;
            for (const auto& r : rr.roots) {
                CHECK(r.pow(k) == p);
                found = found || r == x;
            }
            CHECK(found);  // the k-th power must always be invertible on its image
        }
    }
}

TEST_CASE("roots of unity") {
    CHECK(roots_of_unity_exact(1).roots == std::vector<Eisenstein>{Eisenstein(1)});
    CHECK(roots_of_unity_exact(2).roots ==
          std::vector<Eisenstein>{Eisenstein(1), Eisenstein(-1)});
    auto r6 = roots_of_unity_exact(6);
    CHECK(r6.complete);
    CHECK(r6.roots.size() == 6);
    auto r4 = roots_of_unity_exact(4);
    CHECK(!r4.complete);
    CHECK(r4.roots == std::vector<Eisenstein>{Eisenstein(1), Eisenstein(-1)});
    auto r5 = roots_of_unity_exact(5);
    CHECK(!r5.complete);
    CHECK(r5.roots == std::vector<Eisenstein>{Eisenstein(1)});
}

TEST_CASE("approx backend") {
    Tolerance tol;
    ApproxComplex w = ApproxComplex::omega();
    CHECK(tol.near(std::abs(w.value() * w.value() + w.value() + 1.0), 0.0));

    auto cube = kth_roots(ApproxComplex(8.0), 3);
    CHECK(cube.complete);
    REQUIRE(cube.roots.size() == 3);
    for (const auto& r : cube.roots)
        CHECK(std::abs(r.value() * r.value() * r.value() - 8.0) < 1e-9);

    auto u4 = roots_of_unity_approx(4);
    CHECK(u4.roots.size() == 4);

    CHECK_THROWS_AS(ApproxComplex(1.0 / 0.0), NonFiniteValue);
    CHECK_THROWS_AS(ApproxComplex(0.0).inverse(), DivisionByZero);
}
