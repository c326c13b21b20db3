#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "testutil.hpp"
#include "trigcert/verify.hpp"

using namespace trigcert;
using testutil::Q;

namespace {

const char* kExample1 = "3/5 + sin(x) + cos(x) + sin(2*x)/2 + cos(2*x)/2";
const char* kExample4a = "sin(x)/3 + sin(2*x)/2 + sin(3*x) + (23/125)*4";
const char* kExample4b = "sin(x)/4 + sin(2*x)/3 + sin(3*x)/2 + sin(4*x) + (23/125)*5";

Verdict run(const std::string& text, Rational qa, Rational qb, VerifyOptions opts = {}) {
    return verify_nonneg(parse(text), {std::move(qa)}, {std::move(qb)}, opts);
}

double min_on_interval(const ExprPtr& e, double xa, double xb, int samples = 10000) {
    double best = 1e300;
    for (int i = 0; i <= samples; ++i) {
        double x = xa + (xb - xa) * i / samples;
        best = std::min(best, eval_double(e, x));
    }
    return best;
}

}  // namespace

TEST_CASE("reference verdicts") {
    SUBCASE("the worked example is nonnegative on [0, pi]") {
        Verdict v = run(kExample1, Q(0), Q(1));
        CHECK(v.outcome == Outcome::Nonnegative);
        CHECK(v.certificate.pipeline == "halfangle");
        CHECK(v.certificate.reduced == testutil::ipoly({21, 40, -18, 0, 1}));
        CHECK(v.certificate.has_pi_value);
        CHECK(v.certificate.pi_value == Q(1, 10));
        CHECK(check_certificate(v.certificate));
    }
    SUBCASE("both sine sums verify on [0, pi]") {
        CHECK(run(kExample4a, Q(0), Q(1)).outcome == Outcome::Nonnegative);
        CHECK(run(kExample4b, Q(0), Q(1)).outcome == Outcome::Nonnegative);
    }
    SUBCASE("an offset below the minimum is caught with a witness") {
        Verdict v = run("-1 + sin(x)", Q(0), Q(1));
        REQUIRE(v.outcome == Outcome::Violated);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->value < Q(0));
        CHECK(check_certificate(v.certificate));
    }
    SUBCASE("subtracting more than the true minimum flips the verdict") {
        // The first sine sum dips to about 0.0120669 on [0, pi]; subtracting
        // 1/10 pushes it below zero.
        std::string text = std::string(kExample4a) + " - 1/10";
        Verdict v = run(text, Q(0), Q(1));
        REQUIRE(v.outcome == Outcome::Violated);
        REQUIRE(v.witness.has_value());
        ExprPtr e = parse(text);
        CHECK(eval_double(e, std::stod(v.witness->x_approx)) < 0.0);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(run("alpha + sin(x)", Q(0), Q(1)), std::invalid_argument);
    CHECK_THROWS_AS(run("sin(x)", Q(1), Q(0)), std::invalid_argument);
    CHECK_THROWS_AS(run("sin(x)", Q(1), Q(1)), std::invalid_argument);
}

TEST_CASE("pure pipelines are dispatched") {
    Verdict v = run("1 + cos(x)", Q(0), Q(1));
    CHECK(v.outcome == Outcome::Nonnegative);
    CHECK(v.certificate.pipeline == "cosine");
    CHECK(check_certificate(v.certificate));

    v = run("sin(x)", Q(0), Q(1));
    CHECK(v.outcome == Outcome::Nonnegative);
    CHECK(v.certificate.pipeline == "sine");
    CHECK(check_certificate(v.certificate));

    v = run("sin(2*x)", Q(0), Q(1));
    REQUIRE(v.outcome == Outcome::Violated);
    CHECK(v.certificate.pipeline == "halfangle");  // witnesses come from the half-angle form
    REQUIRE(v.witness.has_value());
    double x = std::stod(v.witness->x_approx);
    CHECK(x > 1.5707);
    CHECK(x < 3.1416);
    CHECK(check_certificate(v.certificate));

    v = run("sin(x) + sin(2*x)", Q(0), Q(1));
    REQUIRE(v.outcome == Outcome::Violated);
    CHECK(std::stod(v.witness->x_approx) > 2.0943);  // negative only past 2*pi/3
}

TEST_CASE("sine path operation") {
    MixedForm m = normalize(parse("sin(x)"));
    CHECK(verify_sine_path(m, {Q(0)}, {Q(1)}).outcome == Outcome::Nonnegative);
    CHECK(verify_sine_path(m, {Q(0)}, {Q(2)}).outcome == Outcome::Violated);

    MixedForm m2 = normalize(parse("sin(2*x)"));
    CHECK(verify_sine_path(m2, {Q(0)}, {Q(1)}).outcome == Outcome::Violated);
    CHECK(verify_sine_path(m2, {Q(0)}, {Q(1, 2)}).outcome == Outcome::Nonnegative);

    CHECK_THROWS_AS(verify_sine_path(normalize(parse("1 + sin(x)")), {Q(0)}, {Q(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_sine_path(m, {Q(-1)}, {Q(1)}), std::invalid_argument);

    // A sine polynomial nonnegative on the descending half as well.
    MixedForm m3 = normalize(parse("sin(x) - sin(x)"));
    CHECK(classify(m3) == TrigClass::PureCosine);  // zero expression
}

TEST_CASE("touch points are allowed") {
    CHECK(run("1 - cos(x)", Q(0), Q(2)).outcome == Outcome::Nonnegative);
    CHECK(run("1 + cos(x)", Q(-1), Q(1)).outcome == Outcome::Nonnegative);
    CHECK(run("(1 - cos(x))^2", Q(-1), Q(1)).outcome == Outcome::Nonnegative);
    CHECK(run("(1 - cos(x))^2 * (2 + cos(x))", Q(0), Q(2)).outcome == Outcome::Nonnegative);
    CHECK(run("sin(x)^2", Q(-2), Q(2)).outcome == Outcome::Nonnegative);
    CHECK(run("0", Q(0), Q(1)).outcome == Outcome::Nonnegative);
    // The Pythagorean identity normalizes to the zero expression exactly.
    CHECK(run("sin(x)^2 + cos(x)^2 - 1", Q(-2), Q(2)).outcome == Outcome::Nonnegative);
    // sin(x)*sin(2x) touches zero at 0, pi/2 in [0, pi/2] and stays above.
    CHECK(run("sin(x)*sin(2*x)", Q(0), Q(1, 2)).outcome == Outcome::Nonnegative);
}

TEST_CASE("periodicity reduction") {
    CHECK(run("1 + cos(x)", Q(0), Q(20)).outcome == Outcome::Nonnegative);
    CHECK(run("3/5 + sin(x)", Q(4), Q(9, 2)).outcome == Outcome::Nonnegative);
    CHECK(run("3/5 + sin(x)", Q(4), Q(6)).outcome == Outcome::Violated);
    CHECK(run(kExample1, Q(2), Q(3)).outcome == Outcome::Nonnegative);
}

TEST_CASE("direct T-interval verification") {
    ExprPtr e = parse(kExample1);
    Interval ray;
    ray.lo = Q(0);
    ray.lo_closed = true;
    Verdict v = verify_nonneg_t(e, ray);
    CHECK(v.outcome == Outcome::Nonnegative);
    CHECK(check_certificate(v.certificate));

    Verdict w = verify_nonneg_t(e, Interval::closed(Q(-5), Q(0)));
    REQUIRE(w.outcome == Outcome::Violated);
    CHECK(w.witness->value < Q(0));
    CHECK(check_certificate(w.certificate));
}

TEST_CASE("soundness and completeness against a sampling oracle") {
    testutil::Rng rng(123456);
    // Half-integer multiples of pi all have exact tangent half-angle images,
    // so these intervals exercise the splitting and periodic shifting too.
    const Rational exact_qs[] = {Q(-2), Q(-3, 2), Q(-1), Q(-1, 2), Q(0),
                                 Q(1, 2), Q(1),  Q(3, 2),  Q(2)};
    int nonneg_count = 0, violated_count = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::ostringstream os;
        int terms = static_cast<int>(rng.integer(1, 4));
        os << "(" << rng.rational(3, 2).str() << ")";
        for (int t = 0; t < terms; ++t) {
            os << " + (" << rng.rational(3, 2).str() << ")*" << (rng.integer(0, 1) ? "sin" : "cos")
               << "(" << rng.integer(1, 5) << "*x)";
        }
        const std::string text = os.str();
        CAPTURE(text);

        int ia = static_cast<int>(rng.integer(0, 8));
        int ib = static_cast<int>(rng.integer(0, 8));
        if (ia == ib) continue;
        if (ia > ib) std::swap(ia, ib);
        const Rational qa = exact_qs[ia], qb = exact_qs[ib];

        ExprPtr e = parse(text);
        Verdict v = verify_nonneg(e, {qa}, {qb});
        const double xa = qa.to_double() * 3.14159265358979;
        const double xb = qb.to_double() * 3.14159265358979;
        const double lowest = min_on_interval(e, xa, xb);
        double scale = 1.0;
        for (int i = 0; i <= 100; ++i)
            scale = std::max(scale, std::abs(eval_double(e, xa + (xb - xa) * i / 100.0)));

        if (v.outcome == Outcome::Nonnegative) {
            nonneg_count++;
            CHECK(lowest >= -1e-9 * scale);
        } else {
            REQUIRE(v.outcome == Outcome::Violated);  // exact endpoints: never inconclusive
            violated_count++;
            REQUIRE(v.witness.has_value());
            CHECK(v.witness->value < Q(0));
            CHECK(eval_double(e, std::stod(v.witness->x_approx)) < 1e-9 * scale);
        }
        if (lowest < -1e-6 * scale) CHECK(v.outcome == Outcome::Violated);

        CHECK(check_certificate(v.certificate));
    }
    CHECK(nonneg_count > 20);
    CHECK(violated_count > 20);
}

TEST_CASE("cosine dispatch agrees with the forced half-angle route") {
    testutil::Rng rng(777111);
    VerifyOptions forced;
    forced.force_halfangle = true;
    const Rational exact_qs[] = {Q(-1), Q(-1, 2), Q(0), Q(1, 2), Q(1)};
    for (int trial = 0; trial < 100; ++trial) {
        std::ostringstream os;
        os << "(" << rng.rational(2, 2).str() << ")";
        int terms = static_cast<int>(rng.integer(1, 3));
        for (int t = 0; t < terms; ++t)
            os << " + (" << rng.rational(2, 2).str() << ")*cos(" << rng.integer(1, 5) << "*x)";
        const std::string text = os.str();
        CAPTURE(text);
        int ia = static_cast<int>(rng.integer(0, 4));
        int ib = static_cast<int>(rng.integer(0, 4));
        if (ia == ib) continue;
        if (ia > ib) std::swap(ia, ib);
        ExprPtr e = parse(text);
        Verdict via_dispatch = verify_nonneg(e, {exact_qs[ia]}, {exact_qs[ib]});
        Verdict via_halfangle = verify_nonneg(e, {exact_qs[ia]}, {exact_qs[ib]}, forced);
        CHECK(via_dispatch.outcome == via_halfangle.outcome);
    }
}

TEST_CASE("certificate tampering is detected") {
    Verdict v = run(kExample1, Q(0), Q(1));
    REQUIRE(check_certificate(v.certificate));

    SUBCASE("sign flip") {
        Certificate c = v.certificate;
        REQUIRE(!c.checks.empty());
        c.checks[0].sample_value = -c.checks[0].sample_value;
        std::vector<std::string> reasons;
        CHECK_FALSE(check_certificate(c, &reasons));
        CHECK(!reasons.empty());
    }
    SUBCASE("truncated chain") {
        Certificate c = v.certificate;
        REQUIRE(c.checks[0].chain.size() > 2);
        c.checks[0].chain.pop_back();
        std::vector<std::string> reasons;
        CHECK_FALSE(check_certificate(c, &reasons));
        CHECK(!reasons.empty());
    }
    SUBCASE("forged verdict") {
        Verdict bad = run("-1 + sin(x)", Q(0), Q(1));
        Certificate c = bad.certificate;
        c.outcome = Outcome::Nonnegative;
        c.witness.reset();
        CHECK_FALSE(check_certificate(c));
    }
    SUBCASE("tampered reduced polynomial") {
        Certificate c = v.certificate;
        c.reduced += testutil::ipoly({1});
        CHECK_FALSE(check_certificate(c));
    }
}

TEST_CASE("certificates survive JSON round trips") {
    for (const char* text : {kExample1, "-1 + sin(x)", "1 + cos(x)", "sin(x)"}) {
        Verdict v = run(text, Q(0), Q(1));
        Certificate parsed = certificate_from_json(certificate_to_json(v.certificate));
        CHECK(parsed.schema == "trigcert-cert-v1");
        CHECK(parsed.outcome == v.outcome);
        CHECK(parsed.reduced == v.certificate.reduced);
        CHECK(check_certificate(parsed));
    }
    CHECK_THROWS_AS(certificate_from_json("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json("{\"schema\": \"trigcert-cert-v1\"}"),
                    std::invalid_argument);
}

TEST_CASE("rounding slack produces InconclusiveBoundary only at the boundary") {
    // Build an expression whose half-angle numerator has a double dip inside
    // the rounding slack of tan(pi/10): the outer interval sees two roots,
    // the inner interval none — the honest answer is "inconclusive".
    const double approx = static_cast<double>(
        tanl(3.14159265358979323846264338L / 10));
    const Rational center = Rational::from_double(approx);
    const Rational eps(4, 10000000000000L);  // 4e-13, inside the 1e-12 slack
    const Rational r1 = center - eps;
    const Rational r2 = center + eps;
    // N(T) = (c - b) T^2 + 2 a T + (b + c) matches (T - r1)(T - r2).
    const Rational c = (Q(1) + r1 * r2) * Q(1, 2);
    const Rational b = (r1 * r2 - Q(1)) * Q(1, 2);
    const Rational a = -(r1 + r2) * Q(1, 2);
    std::ostringstream os;
    os << "(" << c.str() << ") + (" << a.str() << ")*sin(x) + (" << b.str() << ")*cos(x)";

    Verdict v = run(os.str(), Q(0), Q(1, 5));
    CHECK(v.outcome == Outcome::InconclusiveBoundary);
    CHECK_FALSE(v.witness.has_value());
    CHECK(check_certificate(v.certificate));

    // Moving the dip well inside the interval turns the verdict into a clean
    // violation despite the inexact endpoint.
    const Rational r1_in = center - Q(1, 10);
    const Rational r2_in = center - Q(1, 20);
    const Rational c2 = (Q(1) + r1_in * r2_in) * Q(1, 2);
    const Rational b2 = (r1_in * r2_in - Q(1)) * Q(1, 2);
    const Rational a2 = -(r1_in + r2_in) * Q(1, 2);
    std::ostringstream os2;
    os2 << "(" << c2.str() << ") + (" << a2.str() << ")*sin(x) + (" << b2.str() << ")*cos(x)";
    Verdict v2 = run(os2.str(), Q(0), Q(1, 5));
    REQUIRE(v2.outcome == Outcome::Violated);
    CHECK(v2.witness->value < Q(0));
    CHECK(check_certificate(v2.certificate));
}
