#include "trigcert/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace trigcert {

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Nonnegative: return "Nonnegative";
        case Outcome::Violated: return "Violated";
        case Outcome::InconclusiveBoundary: return "InconclusiveBoundary";
    }
    return "?";
}

namespace {

constexpr double kPiD = 3.14159265358979323846;

int asymptotic_sign(const Poly& p, int dir) {
    if (p.is_zero()) return 0;
    int s = p.leading().sign();
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    return s;
}

bool is_positive_multiple(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return false;
    if (a.degree() != b.degree()) return false;
    Rational ratio = a.leading() / b.leading();
    return ratio.sign() > 0 && b * ratio == a;
}

// An in-interval rational point where n is strictly negative, found through
// the gaps between the isolated roots.
std::optional<Rational> find_negative_point(const Poly& n, const Interval& iv,
                                            const VerifyOptions& opts) {
    const Rational margin = cauchy_root_bound(n) + Rational(1);
    const Rational lo_pt = iv.lo ? *iv.lo : -margin;
    const Rational hi_pt = iv.hi ? *iv.hi : margin;

    std::vector<Rational> candidates;
    candidates.push_back(lo_pt);
    candidates.push_back(hi_pt);
    if (lo_pt < hi_pt) {
        auto roots = isolate_roots(n, Interval::closed(lo_pt, hi_pt),
                                   {opts.isolation_width_log2});
        Rational prev = lo_pt;
        for (const Interval& r : roots) {
            candidates.push_back((prev + *r.lo) * Rational(1, 2));
            prev = *r.hi;
        }
        candidates.push_back((prev + hi_pt) * Rational(1, 2));
    }
    for (const Rational& p : candidates)
        if (iv.contains(p) && n.eval(p).sign() < 0) return p;

    // Dense fallback; with exact arithmetic above this should be unreachable.
    if (lo_pt < hi_pt) {
        const int steps = 4 * (n.degree() + 2);
        for (int j = 0; j <= steps; ++j) {
            Rational p = lo_pt + (hi_pt - lo_pt) * Rational(j, steps);
            if (iv.contains(p) && n.eval(p).sign() < 0) return p;
        }
    }
    return std::nullopt;
}

struct CheckResult {
    SignCheckRecord rec;
    std::optional<Rational> neg_point;
};

// The normative nonnegativity check of one polynomial on one interval:
// no odd-multiplicity roots in the interior, nonnegative endpoint signs,
// and a strictly positive sample (unless identically zero).
CheckResult check_poly_nonneg(const Poly& n, const Interval& iv, const char* domain,
                              bool negated, const VerifyOptions& opts) {
    CheckResult out;
    SignCheckRecord& rec = out.rec;
    rec.domain = domain;
    rec.negated = negated;
    rec.poly = n;
    rec.iv = iv;
    if (n.is_zero()) {
        rec.poly_is_zero = true;
        rec.passed = true;
        return out;
    }

    auto dec = squarefree_decompose(n);
    rec.sf_constant = dec.constant;
    rec.sf_factors = dec.factors;
    Poly odd{Rational(1)};
    for (const auto& f : dec.factors)
        if (f.multiplicity % 2 == 1) odd = odd * f.factor;
    rec.odd = odd;
    SturmChain chain = build_chain(odd);
    rec.chain = chain.polys;

    if (iv.is_point()) {
        const Rational v = n.eval(*iv.lo);
        rec.lo_sign = rec.hi_sign = EndpointSign{false, 0, *iv.lo, v, v.sign()};
        rec.sample = *iv.lo;
        rec.sample_value = v;
        rec.passed = v.sign() >= 0;
        if (!rec.passed) out.neg_point = *iv.lo;
        return out;
    }

    rec.var_lo = sign_variations(chain, iv.lo ? ChainPoint::at(*iv.lo) : ChainPoint::neg_inf());
    rec.var_hi = sign_variations(chain, iv.hi ? ChainPoint::at(*iv.hi) : ChainPoint::pos_inf());
    int interior = rec.var_lo - rec.var_hi;  // roots in (lo, hi]
    if (iv.hi && odd.eval(*iv.hi).is_zero()) interior--;
    rec.interior_roots = interior;

    if (iv.lo) {
        const Rational v = n.eval(*iv.lo);
        rec.lo_sign = {false, 0, *iv.lo, v, v.sign()};
    } else {
        rec.lo_sign = {true, -1, Rational(0), Rational(0), asymptotic_sign(n, -1)};
    }
    if (iv.hi) {
        const Rational v = n.eval(*iv.hi);
        rec.hi_sign = {false, 0, *iv.hi, v, v.sign()};
    } else {
        rec.hi_sign = {true, +1, Rational(0), Rational(0), asymptotic_sign(n, +1)};
    }

    // Midpoint first, perturbed until it avoids the <= deg(n) roots.
    const int retries = n.degree() + 2;
    for (int j = 0; j <= retries; ++j) {
        Rational s;
        if (iv.lo && iv.hi) {
            s = j == 0 ? (*iv.lo + *iv.hi) * Rational(1, 2)
                       : *iv.lo + (*iv.hi - *iv.lo) * Rational(j, retries + 2);
        } else if (iv.lo) {
            s = *iv.lo + Rational(j + 1);
        } else if (iv.hi) {
            s = *iv.hi - Rational(j + 1);
        } else {
            s = Rational(j % 2 == 0 ? j / 2 : -(j + 1) / 2);
        }
        const Rational v = n.eval(s);
        if (!v.is_zero()) {
            rec.sample = s;
            rec.sample_value = v;
            break;
        }
    }

    rec.passed = rec.interior_roots == 0 && rec.lo_sign.sign >= 0 && rec.hi_sign.sign >= 0 &&
                 rec.sample_value.sign() > 0;
    if (!rec.passed) out.neg_point = find_negative_point(n, iv, opts);
    return out;
}

// --- half-angle pipeline ----------------------------------------------------

struct HalfAngleAnalysis {
    RationalForm rf;
    std::vector<SignCheckRecord> records;
    bool pi_in = false;
    Rational pi_value;
    bool passed = false;
    bool all_exact = true;
    std::optional<Rational> neg_t;
    int neg_shift = 0;
};

HalfAngleAnalysis analyze_halfangle(const MixedForm& m, const std::vector<TPiece>& pieces,
                                    bool pi_in, const VerifyOptions& opts) {
    HalfAngleAnalysis out;
    out.rf = weierstrass(m);
    out.pi_in = pi_in;
    if (pi_in) out.pi_value = eval_at_pi(m);
    bool ok = true;
    for (const TPiece& piece : pieces) {
        CheckResult res = check_poly_nonneg(out.rf.numerator, piece.t, "T", false, opts);
        if (!piece.t.exact) out.all_exact = false;
        if (!res.rec.passed) {
            ok = false;
            if (!out.neg_t && res.neg_point) {
                out.neg_t = res.neg_point;
                out.neg_shift = piece.q_shift;
            }
        }
        out.records.push_back(std::move(res.rec));
    }
    if (pi_in && out.pi_value.sign() < 0) {
        ok = false;
        if (!out.neg_t && !out.rf.numerator.is_zero()) {
            // The expression is negative on the approach to pi; any T beyond
            // the root bound of the numerator witnesses it.
            const Rational big = cauchy_root_bound(out.rf.numerator) + Rational(1);
            for (const TPiece& piece : pieces) {
                if (piece.t.hi_infinite()) {
                    Rational t = piece.t.lo ? std::max(big, *piece.t.lo + Rational(1)) : big;
                    out.neg_t = t;
                    out.neg_shift = piece.q_shift;
                    break;
                }
                if (piece.t.lo_infinite()) {
                    Rational t = piece.t.hi ? std::min(-big, *piece.t.hi - Rational(1)) : -big;
                    out.neg_t = t;
                    out.neg_shift = piece.q_shift;
                    break;
                }
            }
        }
    }
    out.passed = ok;
    return out;
}

Rational expression_value_at_t(const RationalForm& rf, const Rational& t) {
    Rational denom(rf.denom_scalar);
    const Rational one_plus_t2 = Rational(1) + t * t;
    for (int i = 0; i < rf.denom_power; ++i) denom *= one_plus_t2;
    return rf.numerator.eval(t) / denom;
}

Witness make_witness(const Rational& t, int q_shift, const RationalForm& rf,
                     const Rational* qa, const Rational* qb) {
    Witness w;
    w.t = t;
    w.value = expression_value_at_t(rf, t);
    double x = 2.0 * std::atan(t.to_double()) + kPiD * q_shift;
    if (qa && qb) {
        // Whole-line pieces carry no shift; fold x into the requested window.
        const double lo = qa->to_double() * kPiD, hi = qb->to_double() * kPiD;
        while (x < lo - 1e-9) x += 2 * kPiD;
        while (x > hi + 1e-9) x -= 2 * kPiD;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", x);
    w.x_approx = buf;
    return w;
}

Certificate make_halfangle_cert(std::string expr, std::string interval,
                                const HalfAngleAnalysis& analysis, Outcome outcome,
                                std::optional<Witness> witness) {
    Certificate cert;
    cert.pipeline = "halfangle";
    cert.expression = std::move(expr);
    cert.interval = std::move(interval);
    cert.reduced = analysis.rf.numerator;
    cert.reduced_var = "T";
    cert.denom_scalar = analysis.rf.denom_scalar;
    cert.denom_power = analysis.rf.denom_power;
    cert.has_pi_value = analysis.pi_in;
    cert.pi_value = analysis.pi_value;
    cert.checks = analysis.records;
    cert.outcome = outcome;
    cert.witness = std::move(witness);
    return cert;
}

Verdict general_verdict(const MixedForm& m, const AngleSpec& a, const AngleSpec& b,
                        const VerifyOptions& opts, std::string expr_echo,
                        std::string iv_echo) {
    const bool pi_in = interval_contains_pi_point(a, b);
    HalfAngleAnalysis outer =
        analyze_halfangle(m, map_x_interval_pieces(a, b, Rounding::Outward), pi_in, opts);
    if (outer.passed) {
        Certificate cert = make_halfangle_cert(std::move(expr_echo), std::move(iv_echo), outer,
                                               Outcome::Nonnegative, std::nullopt);
        return {Outcome::Nonnegative, std::move(cert), std::nullopt};
    }
    if (outer.all_exact) {
        if (!outer.neg_t) throw std::logic_error("violated verdict without a witness point");
        Witness w = make_witness(*outer.neg_t, outer.neg_shift, outer.rf, &a.q, &b.q);
        Certificate cert = make_halfangle_cert(std::move(expr_echo), std::move(iv_echo), outer,
                                               Outcome::Violated, w);
        return {Outcome::Violated, std::move(cert), std::move(w)};
    }
    HalfAngleAnalysis inner =
        analyze_halfangle(m, map_x_interval_pieces(a, b, Rounding::Inward), pi_in, opts);
    if (!inner.passed) {
        if (!inner.neg_t) throw std::logic_error("violated verdict without a witness point");
        Witness w = make_witness(*inner.neg_t, inner.neg_shift, inner.rf, &a.q, &b.q);
        Certificate cert = make_halfangle_cert(std::move(expr_echo), std::move(iv_echo), inner,
                                               Outcome::Violated, w);
        return {Outcome::Violated, std::move(cert), std::move(w)};
    }
    // The only failures live inside the rounding slack of an inexact endpoint.
    Certificate cert = make_halfangle_cert(std::move(expr_echo), std::move(iv_echo), outer,
                                           Outcome::InconclusiveBoundary, std::nullopt);
    return {Outcome::InconclusiveBoundary, std::move(cert), std::nullopt};
}

// --- pure pipelines ---------------------------------------------------------

struct XPiece {
    Interval x;
    bool sin_nonneg;  // sign of sin on the source x-piece
};

// X-images of [a*pi, b*pi] split at multiples of pi, each monotone piece
// mirrored into the [0, pi] window. A span of a full period is the whole
// cosine range.
std::vector<XPiece> x_pieces(const AngleSpec& a, const AngleSpec& b, Rounding rounding,
                             bool split_by_sin_sign) {
    std::vector<XPiece> out;
    if (b.q - a.q >= Rational(2)) {
        Interval full = Interval::closed(Rational(-1), Rational(1));
        out.push_back({full, true});
        if (split_by_sin_sign) out.push_back({std::move(full), false});
        return out;
    }
    mpz_class j0 = floor_to_int(a.q);
    mpz_class j1 = ceil_to_int(b.q);
    for (mpz_class j = j0; j < j1; ++j) {
        const Rational jq(j);
        const Rational u = std::max(a.q, jq);
        const Rational v = std::min(b.q, jq + Rational(1));
        if (u >= v) continue;
        const bool even = mpz_even_p(j.get_mpz_t()) != 0;
        AngleSpec r1, r2;
        if (even) {
            r1 = {u - jq};
            r2 = {v - jq};
        } else {
            r1 = {jq + Rational(1) - v};
            r2 = {jq + Rational(1) - u};
        }
        out.push_back({map_x_interval_cosine(r1, r2, rounding), even});
    }
    return out;
}

struct PureAnalysis {
    std::vector<SignCheckRecord> records;
    bool passed = true;
};

PureAnalysis analyze_cosine(const Poly& p, const AngleSpec& a, const AngleSpec& b,
                            const VerifyOptions& opts) {
    PureAnalysis out;
    for (const XPiece& piece : x_pieces(a, b, Rounding::Outward, /*split_by_sin_sign=*/false)) {
        CheckResult res = check_poly_nonneg(p, piece.x, "X", false, opts);
        out.passed = out.passed && res.rec.passed;
        out.records.push_back(std::move(res.rec));
    }
    return out;
}

PureAnalysis analyze_sine(const Poly& p, const AngleSpec& a, const AngleSpec& b,
                          const VerifyOptions& opts) {
    PureAnalysis out;
    for (const XPiece& piece : x_pieces(a, b, Rounding::Outward, /*split_by_sin_sign=*/true)) {
        const Poly checked = piece.sin_nonneg ? p : -p;
        CheckResult res = check_poly_nonneg(checked, piece.x, "X", !piece.sin_nonneg, opts);
        out.passed = out.passed && res.rec.passed;
        out.records.push_back(std::move(res.rec));
    }
    return out;
}

Certificate make_pure_cert(const char* pipeline, std::string expr, std::string interval,
                           const Poly& reduced, PureAnalysis analysis, Outcome outcome) {
    Certificate cert;
    cert.pipeline = pipeline;
    cert.expression = std::move(expr);
    cert.interval = std::move(interval);
    cert.reduced = reduced;
    cert.reduced_var = "X";
    cert.checks = std::move(analysis.records);
    cert.outcome = outcome;
    return cert;
}

std::string angle_interval_echo(const AngleSpec& a, const AngleSpec& b) {
    return a.q.str() + "*pi," + b.q.str() + "*pi";
}

}  // namespace

Verdict verify_nonneg(const ExprPtr& e, const AngleSpec& a, const AngleSpec& b,
                      const VerifyOptions& opts) {
    if (a.q >= b.q) throw std::invalid_argument("invalid interval: need a < b");
    MixedForm m = normalize(e);
    if (m.parametric)
        throw std::invalid_argument("parametric expression: use minimize");
    const std::string expr_echo = to_string(e);
    const std::string iv_echo = angle_interval_echo(a, b);

    // The pure reductions halve the degree (and are exact at more endpoints),
    // so try them first; any failure falls through to the half-angle pipeline,
    // which produces the witness.
    const TrigClass cls = opts.force_halfangle ? TrigClass::General : classify(m);
    if (cls == TrigClass::PureCosine) {
        PureAnalysis pa = analyze_cosine(m.p1_plain(), a, b, opts);
        if (pa.passed) {
            Certificate cert = make_pure_cert("cosine", expr_echo, iv_echo, m.p1_plain(),
                                              std::move(pa), Outcome::Nonnegative);
            return {Outcome::Nonnegative, std::move(cert), std::nullopt};
        }
    } else if (cls == TrigClass::PureSine) {
        PureAnalysis pa = analyze_sine(m.p2_plain(), a, b, opts);
        if (pa.passed) {
            Certificate cert = make_pure_cert("sine", expr_echo, iv_echo, m.p2_plain(),
                                              std::move(pa), Outcome::Nonnegative);
            return {Outcome::Nonnegative, std::move(cert), std::nullopt};
        }
    }
    return general_verdict(m, a, b, opts, expr_echo, iv_echo);
}

Verdict verify_nonneg_t(const ExprPtr& e, const Interval& t_iv, const VerifyOptions& opts) {
    if (!t_iv.valid()) throw std::invalid_argument("invalid T-interval");
    MixedForm m = normalize(e);
    if (m.parametric)
        throw std::invalid_argument("parametric expression: use minimize");
    HalfAngleAnalysis analysis = analyze_halfangle(m, {{t_iv, 0}}, false, opts);
    std::string iv_echo = "T:" + t_iv.str();
    if (analysis.passed) {
        Certificate cert = make_halfangle_cert(to_string(e), std::move(iv_echo), analysis,
                                               Outcome::Nonnegative, std::nullopt);
        return {Outcome::Nonnegative, std::move(cert), std::nullopt};
    }
    if (!analysis.neg_t) throw std::logic_error("violated verdict without a witness point");
    Witness w = make_witness(*analysis.neg_t, 0, analysis.rf, nullptr, nullptr);
    Certificate cert =
        make_halfangle_cert(to_string(e), std::move(iv_echo), analysis, Outcome::Violated, w);
    return {Outcome::Violated, std::move(cert), std::move(w)};
}

Verdict verify_sine_path(const MixedForm& m, const AngleSpec& a, const AngleSpec& b,
                         const VerifyOptions& opts) {
    if (classify(m) != TrigClass::PureSine) throw std::invalid_argument("not a sine polynomial");
    if (a.q < Rational(0) || a.q >= b.q || b.q > Rational(2))
        throw std::invalid_argument("sine path requires [a, b] within [0, 2*pi]");
    const Poly p = m.p2_plain();
    const std::string expr_echo = "sin(x) * [" + p.str("X") + "]";
    const std::string iv_echo = angle_interval_echo(a, b);
    PureAnalysis pa = analyze_sine(p, a, b, opts);
    if (pa.passed) {
        Certificate cert = make_pure_cert("sine", expr_echo, iv_echo, p, std::move(pa),
                                          Outcome::Nonnegative);
        return {Outcome::Nonnegative, std::move(cert), std::nullopt};
    }
    return general_verdict(m, a, b, opts, expr_echo, iv_echo);
}

// --- certificate checking ---------------------------------------------------

namespace {

bool endpoint_sign_matches(const SignCheckRecord& r, const EndpointSign& e, bool is_lo,
                           std::vector<std::string>& reasons, const std::string& tag) {
    const std::optional<Rational>& end = is_lo ? r.iv.lo : r.iv.hi;
    bool ok = true;
    if (end) {
        if (e.infinite) {
            reasons.push_back(tag + "endpoint marked infinite on a finite interval end");
            return false;
        }
        if (e.point != *end) {
            reasons.push_back(tag + "endpoint evaluation point mismatch");
            ok = false;
        }
        if (e.value != r.poly.eval(e.point) || e.sign != e.value.sign()) {
            reasons.push_back(tag + "endpoint value does not re-evaluate");
            ok = false;
        }
    } else {
        const int dir = is_lo ? -1 : +1;
        if (!e.infinite || e.inf_dir != dir || e.sign != asymptotic_sign(r.poly, dir)) {
            reasons.push_back(tag + "asymptotic endpoint sign does not re-derive");
            ok = false;
        }
    }
    return ok;
}

}  // namespace

bool check_certificate(const Certificate& c, std::vector<std::string>* reasons_out) {
    std::vector<std::string> reasons;
    auto fail = [&](std::string r) { reasons.push_back(std::move(r)); };

    if (c.schema != "trigcert-cert-v1") fail("unknown schema '" + c.schema + "'");
    const bool halfangle = c.pipeline == "halfangle";
    if (!halfangle && c.pipeline != "cosine" && c.pipeline != "sine")
        fail("unknown pipeline '" + c.pipeline + "'");
    if (c.denom_scalar <= 0) fail("denominator scalar must be positive");

    bool all_passed = true;
    for (size_t i = 0; i < c.checks.size(); ++i) {
        const SignCheckRecord& r = c.checks[i];
        const std::string tag = "check " + std::to_string(i) + ": ";
        if (r.poly != (r.negated ? -c.reduced : c.reduced))
            fail(tag + "checked polynomial does not match the reduced polynomial");
        if (!r.iv.valid()) {
            fail(tag + "invalid interval");
            continue;
        }
        if (r.poly_is_zero) {
            if (!r.poly.is_zero()) fail(tag + "zero marker on a nonzero polynomial");
            if (!r.passed) fail(tag + "the zero polynomial is nonnegative");
            continue;
        }
        if (r.poly.is_zero()) {
            fail(tag + "zero polynomial without marker");
            continue;
        }

        // Square-free data.
        Poly reassembled(r.sf_constant);
        bool factors_ok = true;
        for (const auto& f : r.sf_factors) {
            if (f.multiplicity < 1 || f.factor.is_zero() || !(f.factor.leading() == Rational(1))) {
                fail(tag + "malformed square-free factor");
                factors_ok = false;
                break;
            }
            if (f.factor.degree() > 0 &&
                poly_gcd(f.factor, f.factor.derivative()).degree() != 0) {
                fail(tag + "factor is not square-free");
                factors_ok = false;
            }
            reassembled = reassembled * f.factor.pow(static_cast<unsigned>(f.multiplicity));
        }
        if (factors_ok) {
            for (size_t s = 0; s + 1 < r.sf_factors.size(); ++s)
                for (size_t t = s + 1; t < r.sf_factors.size(); ++t)
                    if (poly_gcd(r.sf_factors[s].factor, r.sf_factors[t].factor).degree() != 0)
                        fail(tag + "square-free factors share a root");
            if (reassembled != r.poly) fail(tag + "square-free reassembly mismatch");
            Poly odd{Rational(1)};
            for (const auto& f : r.sf_factors)
                if (f.multiplicity % 2 == 1) odd = odd * f.factor;
            if (odd != r.odd) fail(tag + "odd part mismatch");
        }

        // Chain recurrences.
        if (r.chain.empty()) {
            fail(tag + "empty Sturm chain");
            continue;
        }
        bool chain_ok = true;
        if (!is_positive_multiple(r.chain[0], r.odd)) {
            fail(tag + "chain head is not the odd part");
            chain_ok = false;
        }
        if (r.chain[0].degree() >= 1) {
            if (r.chain.size() < 2 || !is_positive_multiple(r.chain[1], r.chain[0].derivative())) {
                fail(tag + "chain second element is not the derivative");
                chain_ok = false;
            }
        }
        for (size_t k = 2; chain_ok && k < r.chain.size(); ++k) {
            auto [q, rem] = divmod(r.chain[k - 2], r.chain[k - 1]);
            if (rem.is_zero() || !is_positive_multiple(r.chain[k], -rem)) {
                fail(tag + "chain recurrence broken at element " + std::to_string(k));
                chain_ok = false;
            }
        }
        const Poly& last = r.chain.back();
        if (last.is_zero() || last.degree() != 0)
            fail(tag + "chain does not end in a nonzero constant");

        if (r.iv.is_point()) {
            const Rational v = r.poly.eval(*r.iv.lo);
            if (r.sample != *r.iv.lo || r.sample_value != v)
                fail(tag + "point evaluation does not re-derive");
            if (r.passed != (v.sign() >= 0)) fail(tag + "pass flag inconsistent at point");
            all_passed = all_passed && r.passed;
            continue;
        }

        // Variation counts and the interior root count.
        if (chain_ok) {
            SturmChain chain{r.chain, r.odd};
            const int vlo = sign_variations(
                chain, r.iv.lo ? ChainPoint::at(*r.iv.lo) : ChainPoint::neg_inf());
            const int vhi = sign_variations(
                chain, r.iv.hi ? ChainPoint::at(*r.iv.hi) : ChainPoint::pos_inf());
            if (vlo != r.var_lo || vhi != r.var_hi)
                fail(tag + "sign variation counts do not re-derive");
            int interior = vlo - vhi;
            if (r.iv.hi && r.odd.eval(*r.iv.hi).is_zero()) interior--;
            if (interior != r.interior_roots) fail(tag + "interior root count mismatch");
        }

        endpoint_sign_matches(r, r.lo_sign, true, reasons, tag);
        endpoint_sign_matches(r, r.hi_sign, false, reasons, tag);

        if (!r.iv.contains(r.sample)) fail(tag + "sample point outside the interval");
        if (r.sample_value != r.poly.eval(r.sample)) fail(tag + "sample value does not re-evaluate");

        const bool expect_passed = r.interior_roots == 0 && r.lo_sign.sign >= 0 &&
                                   r.hi_sign.sign >= 0 && r.sample_value.sign() > 0;
        if (expect_passed != r.passed) fail(tag + "pass flag inconsistent");
        all_passed = all_passed && r.passed;
    }

    bool pi_ok = true;
    if (c.has_pi_value) {
        if (halfangle) {
            // The value at pi equals lead/d when the degree is full, 0 otherwise.
            Rational expect(0);
            if (!c.reduced.is_zero() && c.reduced.degree() == 2 * c.denom_power)
                expect = Rational(c.reduced.leading().num(), c.reduced.leading().den()) /
                         Rational(c.denom_scalar);
            if (c.pi_value != expect) fail("recorded pi value does not match the numerator");
        } else if (c.pipeline == "sine" && !c.pi_value.is_zero()) {
            fail("a sine polynomial vanishes at pi");
        }
        pi_ok = c.pi_value.sign() >= 0;
    }

    const bool verdict_nonneg = all_passed && pi_ok;
    switch (c.outcome) {
        case Outcome::Nonnegative:
            if (!verdict_nonneg) fail("Nonnegative verdict contradicts the recorded checks");
            if (c.witness) fail("Nonnegative verdict must not carry a witness");
            break;
        case Outcome::Violated: {
            if (verdict_nonneg) fail("Violated verdict but every recorded check passes");
            if (!halfangle) fail("violation witnesses require the half-angle pipeline");
            if (!c.witness) {
                fail("Violated verdict without witness");
                break;
            }
            const Witness& w = *c.witness;
            if (halfangle) {
                Rational denom(c.denom_scalar);
                const Rational one_plus_t2 = Rational(1) + w.t * w.t;
                for (int i = 0; i < c.denom_power; ++i) denom *= one_plus_t2;
                if (c.reduced.eval(w.t) != w.value * denom)
                    fail("witness value does not re-evaluate");
                if (w.value.sign() >= 0) fail("witness value is not negative");
                bool inside = false;
                for (const auto& r : c.checks) inside = inside || r.iv.contains(w.t);
                if (!inside) fail("witness lies outside every checked interval");
            }
            break;
        }
        case Outcome::InconclusiveBoundary: {
            if (verdict_nonneg) fail("InconclusiveBoundary verdict but every check passes");
            bool any_inexact = false;
            for (const auto& r : c.checks) any_inexact = any_inexact || !r.iv.exact;
            if (!any_inexact) fail("InconclusiveBoundary requires an inexact endpoint");
            break;
        }
    }

    if (reasons_out) *reasons_out = reasons;
    return reasons.empty();
}

}  // namespace trigcert
