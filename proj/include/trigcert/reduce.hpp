#ifndef TRIGCERT_REDUCE_HPP
#define TRIGCERT_REDUCE_HPP

#include <string_view>
#include <variant>
#include <vector>

#include "trigcert/interval.hpp"
#include "trigcert/poly.hpp"
#include "trigcert/trigexpr.hpp"

namespace trigcert {

/// numerator / (denom_scalar * (1+T^2)^denom_power) with T = tan(x/2).
/// The numerator has integer coefficients (content cleared into
/// denom_scalar) and the denominator is strictly positive, so the sign of
/// the source expression on (-pi, pi) is the sign of the numerator.
struct RationalForm {
    Poly numerator;
    mpz_class denom_scalar = 1;  // d > 0
    int denom_power = 0;         // m
};

/// Parametric variant: numerator coefficients are degree-<=1 polynomials in
/// the parameter.
struct ParamRationalForm {
    ParamPoly numerator;
    mpz_class denom_scalar = 1;
    int denom_power = 0;
};

/// The angle x = q * pi.
struct AngleSpec {
    Rational q;
};

/// P with P(cos x) equal to the expression. Requires classify == PureCosine.
Poly to_cosine_poly(const MixedForm& m);
/// P with sin(x) * P(cos x) equal to the expression. Requires PureSine.
Poly to_sine_form(const MixedForm& m);

/// Tangent half-angle substitution; exact for every MixedForm.
/// denom_power = max(deg p1, deg p2 + 1) and denom_scalar is the least
/// positive integer clearing all coefficient denominators.
RationalForm weierstrass(const MixedForm& m);
ParamRationalForm weierstrass_param(const MixedForm& m);

/// Exact expression value at x = pi, i.e. P1(-1).
Rational eval_at_pi(const MixedForm& m);
/// Parametric variant: a degree-<=1 Poly in the parameter.
Poly eval_at_pi_param(const MixedForm& m);

/// One mapped piece of an x-interval under T = tan(x/2). The original angle
/// is x = 2*atan(T) + pi*q_shift (q_shift is an even integer).
struct TPiece {
    Interval t;
    int q_shift = 0;
};

/// Image of [a*pi, b*pi] under T = tan(x/2), split at odd multiples of pi
/// (which map to the point at infinity, handled by eval_at_pi) and shifted by
/// periodicity into (-pi, pi]. Intervals spanning a full period map to the
/// whole line.
std::vector<TPiece> map_x_interval_pieces(const AngleSpec& a, const AngleSpec& b);
std::vector<Interval> map_x_interval(const AngleSpec& a, const AngleSpec& b);

/// True iff some odd multiple of pi lies in [a*pi, b*pi].
bool interval_contains_pi_point(const AngleSpec& a, const AngleSpec& b);

/// X-image [cos(b*pi), cos(a*pi)] of [a*pi, b*pi]; requires 0 <= a.q < b.q <= 1.
/// Exact for q in {0, 1/3, 1/2, 2/3, 1}, outward-rounded otherwise.
Interval map_x_interval_cosine(const AngleSpec& a, const AngleSpec& b);

/// Rounding direction for inexact endpoints. Outward rounding encloses the
/// true image (sound for Nonnegative verdicts); inward rounding is enclosed
/// by it (sound for Violated verdicts).
enum class Rounding { Outward, Inward };

std::vector<TPiece> map_x_interval_pieces(const AngleSpec& a, const AngleSpec& b,
                                          Rounding rounding);
Interval map_x_interval_cosine(const AngleSpec& a, const AngleSpec& b, Rounding rounding);

/// Parsed CLI interval: either an x-interval in units of pi or a direct
/// T-interval.
struct IntervalSpec {
    bool is_t_domain = false;
    AngleSpec a, b;   // x-domain form
    Interval t;       // T-domain form
    std::string echo; // normalized text used in reports
};

/// Accepts "a,b" with angle endpoints ("0", "pi", "-pi", "pi/2", "Q*pi", ...)
/// or T endpoints ("T=0", "T=5/2", "T=inf", "T=-inf"). Throws
/// std::invalid_argument on malformed input or mixed domains.
IntervalSpec parse_interval_spec(std::string_view text);

}  // namespace trigcert

#endif
