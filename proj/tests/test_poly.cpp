#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "testutil.hpp"
#include "trigcert/poly.hpp"

using namespace trigcert;
using testutil::ipoly;
using testutil::Q;

namespace {
const Poly kExample1Numerator = ipoly({21, 40, -18, 0, 1});  // T^4 - 18 T^2 + 40 T + 21
}

TEST_CASE("arithmetic basics") {
    Poly xp1 = ipoly({1, 1});
    Poly xm1 = ipoly({-1, 1});
    CHECK(xp1 * xm1 == ipoly({-1, 0, 1}));
    CHECK(kExample1Numerator.derivative() == ipoly({40, -36, 0, 4}));
    CHECK(kExample1Numerator.eval(Q(1)) == Q(44));
    CHECK((xp1 - xp1).is_zero());
    CHECK(Poly().degree() == Poly::kZeroDegree);
    CHECK(ipoly({2, 0, 1}).degree() == 2);
    CHECK(ipoly({0, 0, 3}).compose(ipoly({0, 2})) == ipoly({0, 0, 12}));
}

TEST_CASE("division identity on random pairs") {
    testutil::Rng rng(7771);
    for (int i = 0; i < 200; ++i) {
        Poly a = rng.poly(8);
        Poly b = rng.nonzero_poly(8);
        auto [q, r] = divmod(a, b);
        CHECK(a == b * q + r);
        if (!r.is_zero()) CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(divmod(ipoly({1}), Poly()), std::domain_error);
}

TEST_CASE("exact division demands zero remainder") {
    Poly prod = ipoly({1, 1}) * ipoly({-3, 1});
    CHECK(exact_div(prod, ipoly({1, 1})) == ipoly({-3, 1}));
    CHECK_THROWS_WITH_AS(exact_div(ipoly({1, 1, 1}), ipoly({0, 1})), "not divisible",
                         std::domain_error);
}

TEST_CASE("gcd") {
    Poly a = ipoly({-1, 1}).pow(2) * ipoly({2, 1});   // (X-1)^2 (X+2)
    Poly b = ipoly({-1, 1}) * ipoly({-3, 1});          // (X-1)(X-3)
    CHECK(poly_gcd(a, b) == ipoly({-1, 1}));
    CHECK(poly_gcd(a, ipoly({1})) == ipoly({1}));
    CHECK(poly_gcd(kExample1Numerator, kExample1Numerator.derivative()) == ipoly({1}));
    CHECK_THROWS_AS(poly_gcd(Poly(), Poly()), std::invalid_argument);

    testutil::Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        Poly p = rng.nonzero_poly(5);
        Poly q = rng.nonzero_poly(5);
        Poly g = poly_gcd(p, q);
        CHECK(exact_div(p, g) * g == p);
        CHECK(exact_div(q, g) * g == q);
        if (g.degree() > 0) CHECK(g.leading() == Q(1));
    }
}

TEST_CASE("square-free decomposition") {
    SUBCASE("constructed multiplicities") {
        Poly p = ipoly({-1, 1}).pow(2) * ipoly({2, 1});
        auto dec = squarefree_decompose(p);
        REQUIRE(dec.factors.size() == 2);
        CHECK(dec.factors[0].factor == ipoly({2, 1}));
        CHECK(dec.factors[0].multiplicity == 1);
        CHECK(dec.factors[1].factor == ipoly({-1, 1}));
        CHECK(dec.factors[1].multiplicity == 2);
        CHECK(dec.constant == Q(1));
    }
    SUBCASE("already square-free") {
        auto dec = squarefree_decompose(kExample1Numerator);
        REQUIRE(dec.factors.size() == 1);
        CHECK(dec.factors[0].multiplicity == 1);
        CHECK(dec.factors[0].factor == kExample1Numerator.monic());
    }
    SUBCASE("irreducible cube") {
        auto dec = squarefree_decompose(ipoly({1, 0, 1}).pow(3));
        REQUIRE(dec.factors.size() == 1);
        CHECK(dec.factors[0].factor == ipoly({1, 0, 1}));
        CHECK(dec.factors[0].multiplicity == 3);
    }
    SUBCASE("zero polynomial rejected") {
        CHECK_THROWS_AS(squarefree_decompose(Poly()), std::invalid_argument);
    }
    SUBCASE("reassembly on random products") {
        testutil::Rng rng(4242);
        for (int i = 0; i < 200; ++i) {
            // Build from distinct linear factors with small multiplicities.
            Poly p(rng.nonzero_rational());
            long used[3] = {100, 100, 100};
            int nfac = static_cast<int>(rng.integer(1, 3));
            for (int f = 0; f < nfac; ++f) {
                long root;
                bool fresh;
                do {
                    root = rng.integer(-4, 4);
                    fresh = root != used[0] && root != used[1] && root != used[2];
                } while (!fresh);
                used[f] = root;
                p = p * ipoly({-root, 1}).pow(static_cast<unsigned>(rng.integer(1, 3)));
            }
            auto dec = squarefree_decompose(p);
            Poly re(dec.constant);
            for (const auto& f : dec.factors) {
                re = re * f.factor.pow(static_cast<unsigned>(f.multiplicity));
                CHECK(poly_gcd(f.factor, f.factor.derivative()).degree() == 0);
            }
            CHECK(re == p);
            for (size_t s = 0; s < dec.factors.size(); ++s)
                for (size_t t = s + 1; t < dec.factors.size(); ++t)
                    CHECK(poly_gcd(dec.factors[s].factor, dec.factors[t].factor).degree() == 0);
        }
    }
}

TEST_CASE("odd part keeps exactly the sign-change roots") {
    CHECK(odd_part(ipoly({-1, 1}).pow(2) * ipoly({2, 1})) == ipoly({2, 1}));
    CHECK(odd_part(ipoly({-1, 1}).pow(3)) == ipoly({-1, 1}));
    CHECK(odd_part(kExample1Numerator) == kExample1Numerator.monic());
    CHECK(odd_part(ipoly({0, 0, 7})) == ipoly({1}));  // 7 X^2: double root, no sign change
}

TEST_CASE("chebyshev polynomials") {
    CHECK(chebyshev_first(0) == ipoly({1}));
    CHECK(chebyshev_first(1) == ipoly({0, 1}));
    CHECK(chebyshev_first(2) == ipoly({-1, 0, 2}));
    CHECK(chebyshev_first(3) == ipoly({0, -3, 0, 4}));
    CHECK(chebyshev_second(0) == ipoly({1}));
    CHECK(chebyshev_second(1) == ipoly({0, 2}));
    CHECK(chebyshev_second(2) == ipoly({-1, 0, 4}));

    for (double theta : {0.3, 0.7, 1.1, 2.9}) {
        for (unsigned k = 0; k <= 12; ++k) {
            CHECK(std::abs(chebyshev_first(k).eval_double(std::cos(theta)) - std::cos(k * theta)) <
                  1e-12);
            CHECK(std::abs(std::sin(theta) * chebyshev_second(k).eval_double(std::cos(theta)) -
                           std::sin((k + 1) * theta)) < 1e-12);
        }
    }
}

TEST_CASE("resultant") {
    CHECK(resultant(ipoly({-1, 1}), ipoly({-3, 1})) == Q(2));
    CHECK(resultant(ipoly({-1, 1}).pow(2), ipoly({-1, 1})) == Q(0));
    CHECK(resultant(ipoly({-2, 0, 1}), ipoly({-3, 0, 1})) == Q(1));
    CHECK_THROWS_AS(resultant(Poly(), ipoly({1, 1})), std::invalid_argument);

    SUBCASE("zero exactly when a root is shared") {
        testutil::Rng rng(31337);
        for (int i = 0; i < 150; ++i) {
            Poly p = rng.nonzero_poly(4);
            Poly q = rng.nonzero_poly(4);
            if (p.degree() == 0 && q.degree() == 0) continue;
            bool share = rng.integer(0, 1) == 1;
            if (share) {
                Poly common = ipoly({rng.integer(-3, 3), 1});
                p = p * common;
                q = q * common;
            }
            const bool res_zero = resultant(p, q).is_zero();
            const bool gcd_nonconst = poly_gcd(p, q).degree() > 0;
            CHECK(res_zero == gcd_nonconst);
        }
    }
}

TEST_CASE("parametric discriminant") {
    SUBCASE("perfect square for every parameter value") {
        // (T - alpha)^2 = T^2 - 2 alpha T + alpha^2
        ParamPoly p({Poly{Q(0), Q(0), Q(1)}, Poly{Q(0), Q(-2)}, Poly{Q(1)}});
        CHECK(discriminant_param(p).is_zero());
    }
    SUBCASE("degree below two rejected") {
        CHECK_THROWS_AS(discriminant_param(ParamPoly({Poly{Q(1)}, Poly{Q(1)}})),
                        std::invalid_argument);
    }
    SUBCASE("Mobius-style quartic with linear parameter coefficients") {
        // alpha T^4 - 2 T^3 + (2 alpha - 6) T^2 + 6 T + (alpha + 2):
        // primitive discriminant 32 a^4 - 8 a^3 - 207 a^2 + 162 a + 27.
        ParamPoly p({Poly{Q(2), Q(1)}, Poly{Q(6)}, Poly{Q(-6), Q(2)}, Poly{Q(-2)}, Poly{Q(0), Q(1)}});
        CHECK(discriminant_param(p) == ipoly({27, 162, -207, -8, 32}));
    }
    SUBCASE("quartic whose factored form is often miscopied") {
        // (2a-1) T^4 + (4a-6) T^2 + 8 T + (2a+3):
        // the primitive discriminant factors as (2a-3)(2a-1)(8a^2+12a-9).
        ParamPoly p({Poly{Q(3), Q(2)}, Poly{Q(8)}, Poly{Q(-6), Q(4)}, Poly(), Poly{Q(-1), Q(2)}});
        Poly disc = discriminant_param(p);
        CHECK(disc == ipoly({-27, 108, -108, -16, 32}));
        Poly expected = ipoly({-3, 2}) * ipoly({-1, 2}) * ipoly({-9, 12, 8});
        CHECK(disc == expected.monic() * disc.leading());
    }
    SUBCASE("specialization agrees with the scalar resultant route") {
        // res(p(.;a0), p'(.;a0)) == scale * lc(a0) * disc(a0) for one fixed
        // rational scale (the primitive normalization).
        testutil::Rng rng(5150);
        ParamPoly p({Poly{Q(3), Q(2)}, Poly{Q(8)}, Poly{Q(-6), Q(4)}, Poly(), Poly{Q(-1), Q(2)}});
        Poly disc = discriminant_param(p);
        Rational scale;
        bool have_scale = false;
        for (int i = 0; i < 20; ++i) {
            Rational a0 = rng.rational(9, 5);
            if (p.leading().eval(a0).is_zero()) continue;
            Poly spec = p.substitute_param(a0);
            Rational lhs = resultant(spec, spec.derivative());
            Rational rhs = p.leading().eval(a0) * disc.eval(a0);
            if (rhs.is_zero()) {
                CHECK(lhs.is_zero());
                continue;
            }
            Rational ratio = lhs / rhs;
            if (!have_scale) {
                scale = ratio;
                have_scale = true;
            } else {
                CHECK(ratio == scale);
            }
        }
        CHECK(have_scale);
    }
}

TEST_CASE("text form") {
    CHECK(kExample1Numerator.str("T") == "T^4 - 18*T^2 + 40*T + 21");
    CHECK(Poly{Q(1), Q(-3, 2)}.str("T") == "-3/2*T + 1");
    CHECK(Poly().str("T") == "0");
    CHECK(ipoly({0, -1}).str("X") == "-X");
    CHECK(ipoly({5}).str("X") == "5");
    CHECK(ipoly({0, 0, 1, 1}).str("X") == "X^3 + X^2");

    CHECK(Poly::from_string("T^4 - 18*T^2 + 40*T + 21", "T") == kExample1Numerator);
    CHECK(Poly::from_string("-3/2*T + 1", "T") == Poly{Q(1), Q(-3, 2)});
    CHECK(Poly::from_string("0", "T") == Poly());
    CHECK(Poly::from_string("  276*T^6 +1750*T^5+828*T^4- 7000*T^3+828*T^2+3250*T+276", "T") ==
          ipoly({276, 3250, 828, -7000, 828, 1750, 276}));
    CHECK_THROWS_AS(Poly::from_string("T + ", "T"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::from_string("2X", "X"), std::invalid_argument);
    CHECK_THROWS_AS(Poly::from_string("Y + 1", "X"), std::invalid_argument);

    SUBCASE("round trip on random polynomials") {
        testutil::Rng rng(777);
        for (int i = 0; i < 200; ++i) {
            Poly p = rng.poly(7);
            CHECK(Poly::from_string(p.str("T"), "T") == p);
        }
    }
}
