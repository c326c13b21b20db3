#include "trigcert/minimize.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace trigcert {

namespace {

// Root of a degree-<=1 polynomial in the parameter, if any.
std::optional<Rational> linear_root(const Poly& p) {
    if (p.degree() == 1) return -p.coeff(0) / p.coeff(1);
    return std::nullopt;
}

MixedForm normalized_affine(const ExprPtr& e) {
    MixedForm m = normalize(e);
    if (!m.parametric)
        throw std::invalid_argument("expression has no parameter; use verify instead");
    return m;
}

}  // namespace

ParamPoly parametric_numerator(const ExprPtr& e, const AngleSpec& a, const AngleSpec& b) {
    if (a.q >= b.q) throw std::invalid_argument("invalid interval: need a < b");
    return weierstrass_param(normalized_affine(e)).numerator;
}

CandidateSet candidate_alphas(const ParamPoly& p, const Interval& iv) {
    if (p.degree() < 2)
        throw std::invalid_argument("candidate search requires degree >= 2 in T");
    if (!iv.valid()) throw std::invalid_argument("invalid interval");
    CandidateSet out;
    out.discriminant = discriminant_param(p);
    if (!out.discriminant.is_zero() && out.discriminant.degree() >= 1)
        out.disc_intervals = isolate_roots(out.discriminant, Interval::whole_line());
    if (iv.lo && iv.lo_closed)
        if (auto r = linear_root(p.eval_main(*iv.lo))) out.exact.push_back(*r);
    if (iv.hi && iv.hi_closed)
        if (auto r = linear_root(p.eval_main(*iv.hi))) out.exact.push_back(*r);
    if (auto r = linear_root(p.leading())) out.exact.push_back(*r);
    return out;
}

Enclosure min_alpha(const ExprPtr& e, const AngleSpec& a, const AngleSpec& b,
                    const Rational& tol, const VerifyOptions& opts) {
    if (tol.sign() <= 0) throw std::invalid_argument("tolerance must be positive");
    if (a.q >= b.q) throw std::invalid_argument("invalid interval: need a < b");
    MixedForm m = normalized_affine(e);

    // Feasibility must be monotone in alpha: the alpha part of the expression
    // has to be a positive rational constant.
    Poly alpha_part_p1, alpha_part_p2;
    {
        std::vector<Rational> c1, c2;
        for (const Poly& c : m.p1.coeffs()) c1.push_back(c.coeff(1));
        for (const Poly& c : m.p2.coeffs()) c2.push_back(c.coeff(1));
        alpha_part_p1 = Poly(std::move(c1));
        alpha_part_p2 = Poly(std::move(c2));
    }
    if (!alpha_part_p2.is_zero() || alpha_part_p1.degree() != 0 ||
        alpha_part_p1.coeff(0).sign() <= 0)
        throw std::invalid_argument(
            "the parameter must enter as c*alpha + f(x) with a positive constant c");

    const ParamRationalForm prf = weierstrass_param(m);
    const auto pieces = map_x_interval_pieces(a, b, Rounding::Outward);

    // Candidates: discriminant roots, boundary touches, degree degenerations,
    // and the x = pi value (linear in alpha).
    Enclosure out;
    std::vector<Rational> probe_points;
    if (prf.numerator.degree() >= 2) {
        bool disc_done = false;
        for (const auto& piece : pieces) {
            CandidateSet cs = candidate_alphas(prf.numerator, piece.t);
            if (!disc_done) {
                out.discriminant = cs.discriminant;
                out.candidates = cs.disc_intervals;
                for (const Interval& iv : cs.disc_intervals) {
                    if (iv.lo) probe_points.push_back(*iv.lo);
                    if (iv.hi) probe_points.push_back(*iv.hi);
                }
                disc_done = true;
            }
            for (const Rational& r : cs.exact) {
                out.exact_candidates.push_back(r);
                probe_points.push_back(r);
            }
        }
    } else {
        for (const auto& piece : pieces) {
            const Interval& iv = piece.t;
            if (iv.lo && iv.lo_closed)
                if (auto r = linear_root(prf.numerator.eval_main(*iv.lo))) {
                    out.exact_candidates.push_back(*r);
                    probe_points.push_back(*r);
                }
            if (iv.hi && iv.hi_closed)
                if (auto r = linear_root(prf.numerator.eval_main(*iv.hi))) {
                    out.exact_candidates.push_back(*r);
                    probe_points.push_back(*r);
                }
        }
    }
    if (interval_contains_pi_point(a, b))
        if (auto r = linear_root(eval_at_pi_param(m))) {
            out.exact_candidates.push_back(*r);
            probe_points.push_back(*r);
        }
    std::sort(probe_points.begin(), probe_points.end());
    probe_points.erase(std::unique(probe_points.begin(), probe_points.end()),
                       probe_points.end());
    std::sort(out.exact_candidates.begin(), out.exact_candidates.end());
    out.exact_candidates.erase(
        std::unique(out.exact_candidates.begin(), out.exact_candidates.end()),
        out.exact_candidates.end());

    // Monotone feasibility predicate with memoized verdicts.
    std::map<Rational, Verdict> probes;
    auto feasible = [&](const Rational& alpha) -> bool {
        auto it = probes.find(alpha);
        if (it == probes.end()) {
            Verdict v = verify_nonneg(substitute_param(e, alpha), a, b, opts);
            it = probes.emplace(alpha, std::move(v)).first;
        }
        return it->second.outcome == Outcome::Nonnegative;
    };

    // Feasible upper bound: just above the largest candidate, doubling upward
    // if the candidates missed (possible only through boundary effects).
    Rational hi = (probe_points.empty() ? Rational(0) : probe_points.back()) + Rational(1);
    {
        Rational step(1);
        int guard = 0;
        while (!feasible(hi)) {
            hi += step;
            step *= Rational(2);
            if (++guard > 64)
                throw std::runtime_error("no feasible parameter value found; is f bounded?");
        }
    }
    // Infeasible lower bound: largest infeasible candidate, else doubling down.
    std::optional<Rational> lo;
    for (auto it = probe_points.rbegin(); it != probe_points.rend(); ++it) {
        if (*it >= hi) continue;
        if (feasible(*it)) {
            hi = *it;
        } else {
            lo = *it;
            break;
        }
    }
    if (!lo) {
        Rational probe = hi - Rational(1);
        Rational step(1);
        int guard = 0;
        while (feasible(probe)) {
            hi = probe;
            probe -= step;
            step *= Rational(2);
            if (++guard > 64)
                throw std::runtime_error("expression appears nonnegative for every parameter");
        }
        lo = probe;
    }

    while (hi - *lo > tol) {
        const Rational mid = (*lo + hi) * Rational(1, 2);
        if (feasible(mid))
            hi = mid;
        else
            *lo = mid;
    }

    // The predicate must have been monotone across every probe we made.
    {
        std::optional<Rational> max_feasible_below;
        for (const auto& [alpha, verdict] : probes) {
            const bool ok = verdict.outcome == Outcome::Nonnegative;
            if (!ok && max_feasible_below && *max_feasible_below < alpha)
                throw std::logic_error("feasibility was not monotone in the parameter");
            if (ok && !max_feasible_below) max_feasible_below = alpha;
        }
    }

    out.lo = *lo;
    out.hi = hi;
    feasible(*lo);
    feasible(hi);
    out.lo_cert = probes.at(*lo).certificate;
    out.hi_cert = probes.at(hi).certificate;
    if (probes.at(*lo).outcome == Outcome::Nonnegative ||
        probes.at(hi).outcome != Outcome::Nonnegative)
        throw std::logic_error("enclosure endpoints lost their certified verdicts");
    return out;
}

}  // namespace trigcert
