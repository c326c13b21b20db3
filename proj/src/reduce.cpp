#include "trigcert/reduce.hpp"

#include <cmath>
#include <stdexcept>

namespace trigcert {

Poly to_cosine_poly(const MixedForm& m) {
    if (!m.p2.is_zero()) throw std::invalid_argument("not a cosine polynomial");
    return m.p1_plain();
}

Poly to_sine_form(const MixedForm& m) {
    if (!m.p1.is_zero() || m.p2.is_zero())
        throw std::invalid_argument("not a sine polynomial");
    return m.p2_plain();
}

ParamRationalForm weierstrass_param(const MixedForm& m) {
    ParamRationalForm out;
    const bool has_p1 = !m.p1.is_zero();
    const bool has_p2 = !m.p2.is_zero();
    int power = 0;
    if (has_p1) power = std::max(power, m.p1.degree());
    if (has_p2) power = std::max(power, m.p2.degree() + 1);
    out.denom_power = power;
    if (!has_p1 && !has_p2) return out;

    // sin x = 2T/(1+T^2), cos x = (1-T^2)/(1+T^2); multiply through by (1+T^2)^power.
    const Poly u{Rational(1), Rational(0), Rational(-1)};  // 1 - T^2
    const Poly v{Rational(1), Rational(0), Rational(1)};   // 1 + T^2
    const Poly two_t{Rational(0), Rational(2)};

    ParamPoly num;
    if (has_p1) {
        for (int i = 0; i <= m.p1.degree(); ++i) {
            Poly c = m.p1.coeff(i);
            if (c.is_zero()) continue;
            Poly t_part = u.pow(static_cast<unsigned>(i)) *
                          v.pow(static_cast<unsigned>(power - i));
            num += ParamPoly::constant(c) * ParamPoly::from_poly(t_part);
        }
    }
    if (has_p2) {
        for (int i = 0; i <= m.p2.degree(); ++i) {
            Poly c = m.p2.coeff(i);
            if (c.is_zero()) continue;
            Poly t_part = two_t * u.pow(static_cast<unsigned>(i)) *
                          v.pow(static_cast<unsigned>(power - 1 - i));
            num += ParamPoly::constant(c) * ParamPoly::from_poly(t_part);
        }
    }

    mpz_class d(1);
    for (const Poly& c : num.coeffs())
        for (const Rational& r : c.coeffs())
            if (!r.is_zero()) d = lcm(d, r.den());
    out.denom_scalar = d;
    out.numerator = num * Rational(d);
    return out;
}

RationalForm weierstrass(const MixedForm& m) {
    ParamRationalForm p = weierstrass_param(m);
    RationalForm out;
    out.numerator = p.numerator.to_poly();
    out.denom_scalar = p.denom_scalar;
    out.denom_power = p.denom_power;
    return out;
}

Poly eval_at_pi_param(const MixedForm& m) {
    return m.p1.eval_main(Rational(-1));
}

Rational eval_at_pi(const MixedForm& m) {
    Poly v = eval_at_pi_param(m);
    if (v.degree() > 0) throw std::invalid_argument("parametric expression");
    return v.coeff(0);
}

namespace {

// Outward-rounded rational enclosure endpoint for an irrational image value.
// `down` selects the lower enclosure side. The slack absorbs both the long
// double evaluation error and the double conversion.
Rational rounded(long double value, bool down, Rounding rounding) {
    Rational approx = Rational::from_double(static_cast<double>(value));
    static const Rational abs_slack(mpz_class(1), mpz_class("1000000000000"));
    // The (1 + t^2) term covers tan's derivative amplifying the rounding of
    // the long double argument; it is negligible for the cosine map.
    Rational slack = abs_slack + (Rational(1) + approx * approx) * pow2_inv(50);
    const bool widen = (rounding == Rounding::Outward) == down;
    return widen ? approx - slack : approx + slack;
}

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// tan(q*pi/2) for q in (-1, 1); exact at q in {-1/2, 0, 1/2}.
bool tan_half_exact(const Rational& q, Rational* out) {
    if (q.is_zero()) { *out = Rational(0); return true; }
    if (q == Rational(1, 2)) { *out = Rational(1); return true; }
    if (q == Rational(-1, 2)) { *out = Rational(-1); return true; }
    return false;
}

// cos(q*pi) for q in [0, 1]; exact at q in {0, 1/3, 1/2, 2/3, 1}.
bool cos_pi_exact(const Rational& q, Rational* out) {
    if (q.is_zero()) { *out = Rational(1); return true; }
    if (q == Rational(1, 3)) { *out = Rational(1, 2); return true; }
    if (q == Rational(1, 2)) { *out = Rational(0); return true; }
    if (q == Rational(2, 3)) { *out = Rational(-1, 2); return true; }
    if (q == Rational(1)) { *out = Rational(-1); return true; }
    return false;
}

}  // namespace

bool interval_contains_pi_point(const AngleSpec& a, const AngleSpec& b) {
    if (a.q >= b.q) throw std::invalid_argument("empty x-interval");
    if (b.q - a.q >= Rational(2)) return true;
    mpz_class j = ceil_to_int(a.q);
    if (mpz_even_p(j.get_mpz_t())) j += 1;
    return Rational(j) <= b.q;
}

std::vector<TPiece> map_x_interval_pieces(const AngleSpec& a, const AngleSpec& b,
                                          Rounding rounding) {
    if (a.q >= b.q) throw std::invalid_argument("empty x-interval");
    std::vector<TPiece> out;
    if (b.q - a.q >= Rational(2)) {
        out.push_back({Interval::whole_line(), 0});
        return out;
    }

    // Shift by an even k so the left endpoint lands in [-1, 1).
    mpz_class k2 = floor_to_int((a.q + Rational(1)) * Rational(1, 2));
    const Rational shift = Rational(k2) * Rational(2);
    const int shift_int = static_cast<int>(mpz_get_si(k2.get_mpz_t())) * 2;
    const Rational qa = a.q - shift;
    const Rational qb = b.q - shift;

    struct QPiece {
        Rational u, v;
        bool u_from_input, v_from_input;  // endpoint comes from the caller (closed)
        int q_shift;
    };
    std::vector<QPiece> pieces;
    if (qb <= Rational(1)) {
        pieces.push_back({qa, qb, true, true, shift_int});
    } else {
        pieces.push_back({qa, Rational(1), true, false, shift_int});
        pieces.push_back({Rational(-1), qb - Rational(2), false, true, shift_int + 2});
    }

    for (const QPiece& p : pieces) {
        Interval t;
        if (p.u == Rational(-1)) {
            t.lo.reset();  // x -> -pi maps to T -> -infinity
        } else {
            Rational exact;
            if (tan_half_exact(p.u, &exact)) {
                t.lo = exact;
                t.lo_closed = p.u_from_input;
            } else {
                long double val = tanl(static_cast<long double>(p.u.to_double()) * kPi / 2);
                t.lo = rounded(val, /*down=*/true, rounding);
                t.lo_closed = true;
                t.exact = false;
            }
        }
        if (p.v == Rational(1)) {
            t.hi.reset();
        } else {
            Rational exact;
            if (tan_half_exact(p.v, &exact)) {
                t.hi = exact;
                t.hi_closed = p.v_from_input;
            } else {
                long double val = tanl(static_cast<long double>(p.v.to_double()) * kPi / 2);
                t.hi = rounded(val, /*down=*/false, rounding);
                t.hi_closed = true;
                t.exact = false;
            }
        }
        if (!t.valid()) continue;  // inward rounding can empty a narrow piece
        out.push_back({std::move(t), p.q_shift});
    }
    return out;
}

std::vector<TPiece> map_x_interval_pieces(const AngleSpec& a, const AngleSpec& b) {
    return map_x_interval_pieces(a, b, Rounding::Outward);
}

std::vector<Interval> map_x_interval(const AngleSpec& a, const AngleSpec& b) {
    std::vector<Interval> out;
    for (auto& piece : map_x_interval_pieces(a, b)) out.push_back(std::move(piece.t));
    return out;
}

Interval map_x_interval_cosine(const AngleSpec& a, const AngleSpec& b, Rounding rounding) {
    if (a.q < Rational(0) || a.q >= b.q || b.q > Rational(1))
        throw std::invalid_argument("cosine mapping requires 0 <= a < b <= 1 (in units of pi)");
    Interval x;
    x.lo_closed = x.hi_closed = true;
    Rational exact;
    if (cos_pi_exact(b.q, &exact)) {
        x.lo = exact;
    } else {
        x.lo = rounded(cosl(static_cast<long double>(b.q.to_double()) * kPi), true, rounding);
        x.exact = false;
    }
    if (cos_pi_exact(a.q, &exact)) {
        x.hi = exact;
    } else {
        x.hi = rounded(cosl(static_cast<long double>(a.q.to_double()) * kPi), false, rounding);
        x.exact = false;
    }
    if (!x.valid()) throw std::domain_error("empty cosine interval after rounding");
    return x;
}

Interval map_x_interval_cosine(const AngleSpec& a, const AngleSpec& b) {
    return map_x_interval_cosine(a, b, Rounding::Outward);
}

namespace {

AngleSpec parse_angle(std::string_view s) {
    auto bad = [&] {
        throw std::invalid_argument("invalid angle endpoint '" + std::string(s) +
                                    "': expected 0, pi, -pi, pi/2 or Q*pi");
    };
    if (s.empty()) bad();
    if (s == "0") return {Rational(0)};
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-') { neg = true; i = 1; }
    std::string_view rest = s.substr(i);
    Rational q;
    if (rest == "pi") {
        q = Rational(1);
    } else if (rest.substr(0, 3) == "pi/") {
        Rational d = Rational::from_string(rest.substr(3));
        if (d.sign() <= 0) bad();
        q = d.inverse();
    } else {
        size_t star = rest.find("*pi");
        if (star == std::string_view::npos || star + 3 != rest.size()) bad();
        q = Rational::from_string(rest.substr(0, star));
    }
    return {neg ? -q : q};
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

IntervalSpec parse_interval_spec(std::string_view text) {
    size_t comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
        throw std::invalid_argument("interval must be 'a,b'");
    std::string_view lhs = trim(text.substr(0, comma));
    std::string_view rhs = trim(text.substr(comma + 1));
    const bool lt = lhs.substr(0, 2) == "T=";
    const bool rt = rhs.substr(0, 2) == "T=";
    if (lt != rt) throw std::invalid_argument("interval endpoints must share a domain (both angles or both T=)");

    IntervalSpec spec;
    spec.echo = std::string(lhs) + "," + std::string(rhs);
    if (lt) {
        spec.is_t_domain = true;
        auto parse_t = [](std::string_view s, bool is_lo, Interval& iv) {
            std::string_view v = trim(s.substr(2));
            if (v == "inf" || v == "+inf") {
                if (is_lo) throw std::invalid_argument("lower T endpoint cannot be +inf");
                return;
            }
            if (v == "-inf") {
                if (!is_lo) throw std::invalid_argument("upper T endpoint cannot be -inf");
                return;
            }
            if (is_lo) {
                iv.lo = Rational::from_string(v);
                iv.lo_closed = true;
            } else {
                iv.hi = Rational::from_string(v);
                iv.hi_closed = true;
            }
        };
        parse_t(lhs, true, spec.t);
        parse_t(rhs, false, spec.t);
        if (!spec.t.valid() || spec.t.is_point())
            throw std::invalid_argument("empty T-interval");
        return spec;
    }
    spec.a = parse_angle(lhs);
    spec.b = parse_angle(rhs);
    if (spec.a.q >= spec.b.q) throw std::invalid_argument("interval endpoints must satisfy a < b");
    return spec;
}

}  // namespace trigcert
