#ifndef TRIGCERT_VERIFY_HPP
#define TRIGCERT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "trigcert/interval.hpp"
#include "trigcert/poly.hpp"
#include "trigcert/reduce.hpp"
#include "trigcert/sturm.hpp"
#include "trigcert/trigexpr.hpp"

namespace trigcert {

enum class Outcome { Nonnegative, Violated, InconclusiveBoundary };

std::string outcome_name(Outcome o);

/// Violation evidence: an exact rational point in the half-angle coordinate,
/// the (approximate) angle it corresponds to, and the exact expression value
/// there, which is negative.
struct Witness {
    Rational t;
    std::string x_approx;
    Rational value;
};

/// Recorded endpoint evaluation of the checked polynomial.
struct EndpointSign {
    bool infinite = false;
    int inf_dir = 0;  // -1 or +1 when infinite
    Rational point;   // finite case
    Rational value;   // poly(point), finite case
    int sign = 0;     // sign of the value, or the asymptotic sign when infinite
};

/// One nonnegativity check of a polynomial over one interval: the square-free
/// decomposition, the odd part and its Sturm chain, the interior root count,
/// endpoint signs and a positive sample. Everything is recomputable from the
/// recorded polynomials alone.
struct SignCheckRecord {
    std::string domain;    // "T" (half-angle) or "X" (cosine)
    bool negated = false;  // the sine path checks -P on descending pieces
    Poly poly;
    Interval iv;
    bool poly_is_zero = false;
    Rational sf_constant;
    std::vector<SquarefreeFactor> sf_factors;
    Poly odd;
    std::vector<Poly> chain;
    int var_lo = 0;
    int var_hi = 0;
    int interior_roots = 0;
    EndpointSign lo_sign, hi_sign;
    Rational sample;
    Rational sample_value;
    bool passed = false;
};

/// Self-contained, independently checkable record of a verification run.
/// Schema "trigcert-cert-v1"; serialized with rationals as decimal strings.
struct Certificate {
    std::string schema = "trigcert-cert-v1";
    std::string pipeline;  // "cosine" | "sine" | "halfangle"
    std::string expression;
    std::string interval;
    Poly reduced;             // P(X) for pure pipelines, the numerator N(T) otherwise
    std::string reduced_var;  // "X" | "T"
    mpz_class denom_scalar = 1;  // half-angle pipeline
    int denom_power = 0;
    bool has_pi_value = false;
    Rational pi_value;
    std::vector<SignCheckRecord> checks;
    Outcome outcome = Outcome::Nonnegative;
    std::optional<Witness> witness;
};

struct Verdict {
    Outcome outcome = Outcome::Nonnegative;
    Certificate certificate;
    std::optional<Witness> witness;
};

struct VerifyOptions {
    unsigned isolation_width_log2 = 20;
    bool force_halfangle = false;  // skip the pure-path dispatch (testing aid)
};

/// Decides nonnegativity of a parameter-free expression on [a*pi, b*pi].
/// Dispatches to the pure cosine / pure sine reductions when applicable and
/// to the half-angle substitution otherwise. Exact whenever the interval
/// endpoints have exact images; inexact endpoints are outward-rounded and can
/// only produce InconclusiveBoundary, never a wrong answer.
Verdict verify_nonneg(const ExprPtr& e, const AngleSpec& a, const AngleSpec& b,
                      const VerifyOptions& opts = {});

/// Same decision over a caller-supplied T-interval (the x = pi point is not
/// part of the T domain; the asymptotic leading-sign conjunct covers the
/// approach to it).
Verdict verify_nonneg_t(const ExprPtr& e, const Interval& t_iv, const VerifyOptions& opts = {});

/// Sign analysis of sin(x) * P(cos x) through the X domain, splitting at
/// multiples of pi. Requires a pure sine MixedForm and [a*pi, b*pi] within
/// [0, 2*pi].
Verdict verify_sine_path(const MixedForm& m, const AngleSpec& a, const AngleSpec& b,
                         const VerifyOptions& opts = {});

/// Re-verifies every recorded claim: chain recurrences, square-free
/// reassembly, endpoint and sample evaluations, and the verdict logic applied
/// to the recorded counts. Returns false and fills `reasons` on any mismatch.
bool check_certificate(const Certificate& c, std::vector<std::string>* reasons = nullptr);

// JSON serialization (schema "trigcert-cert-v1"; numbers as decimal strings).
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

}  // namespace trigcert

#endif
