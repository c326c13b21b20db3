#ifndef TRIGCERT_MINIMIZE_HPP
#define TRIGCERT_MINIMIZE_HPP

#include <vector>

#include "trigcert/verify.hpp"

namespace trigcert {

/// Candidate values for the minimal feasible parameter: isolating intervals
/// of the discriminant's real roots (interior double-root candidates), plus
/// exact rationals from boundary touching and leading-coefficient
/// degeneration.
struct CandidateSet {
    Poly discriminant;  // in the parameter; zero when degree < 2 in T
    std::vector<Interval> disc_intervals;
    std::vector<Rational> exact;
};

/// Certified enclosure of the least alpha with alpha-expression >= 0:
/// verify(lo) is Violated, verify(hi) is Nonnegative, hi - lo <= tol.
struct Enclosure {
    Rational lo, hi;
    Certificate lo_cert, hi_cert;
    Poly discriminant;
    std::vector<Interval> candidates;
    std::vector<Rational> exact_candidates;
};

/// Half-angle numerator of an expression affine in the parameter:
/// a ParamPoly in T with degree-<=1 coefficients in alpha.
/// Throws std::invalid_argument if the parameter is absent or nonlinear.
ParamPoly parametric_numerator(const ExprPtr& e, const AngleSpec& a, const AngleSpec& b);

/// Necessary-condition candidates for the minimizing parameter over one
/// T-interval. Requires degree in T >= 2.
CandidateSet candidate_alphas(const ParamPoly& p, const Interval& iv);

/// Least alpha with the expression nonnegative on [a*pi, b*pi], as a
/// certified rational enclosure of width <= tol. The expression must be
/// affine in its single parameter with a positive constant coefficient
/// (feasibility is then monotone in alpha). Candidates only accelerate the
/// search; correctness rests on the monotone verify predicate.
Enclosure min_alpha(const ExprPtr& e, const AngleSpec& a, const AngleSpec& b,
                    const Rational& tol, const VerifyOptions& opts = {});

}  // namespace trigcert

#endif
