#ifndef TRIGCERT_INTERVAL_HPP
#define TRIGCERT_INTERVAL_HPP

#include <optional>
#include <string>

#include "trigcert/rational.hpp"

namespace trigcert {

/// Rational interval with optionally infinite endpoints. Used both for the
/// half-angle variable T and for X = cos(x). Infinite endpoints are open.
/// A degenerate single point is allowed with lo == hi, both ends closed.
/// `exact` is false when an endpoint was outward-rounded from an irrational
/// image point.
struct Interval {
    std::optional<Rational> lo;  // nullopt: -infinity
    std::optional<Rational> hi;  // nullopt: +infinity
    bool lo_closed = false;
    bool hi_closed = false;
    bool exact = true;

    static Interval closed(Rational a, Rational b) {
        return {std::move(a), std::move(b), true, true, true};
    }
    static Interval point(Rational a) {
        Interval iv;
        iv.lo = a;
        iv.hi = std::move(a);
        iv.lo_closed = iv.hi_closed = true;
        return iv;
    }
    static Interval whole_line() { return {}; }

    bool lo_infinite() const { return !lo.has_value(); }
    bool hi_infinite() const { return !hi.has_value(); }
    bool is_point() const { return lo && hi && *lo == *hi; }

    bool contains(const Rational& x) const {
        if (lo) {
            if (x < *lo || (x == *lo && !lo_closed)) return false;
        }
        if (hi) {
            if (x > *hi || (x == *hi && !hi_closed)) return false;
        }
        return true;
    }

    /// Both endpoints open; used for interior root counting.
    Interval interior() const {
        Interval r = *this;
        r.lo_closed = r.hi_closed = false;
        return r;
    }

    bool valid() const {
        if (lo && hi) {
            if (*lo > *hi) return false;
            if (*lo == *hi && !(lo_closed && hi_closed)) return false;
        }
        if (!lo && lo_closed) return false;
        if (!hi && hi_closed) return false;
        return true;
    }

    std::string str() const {
        std::string s = lo_closed ? "[" : "(";
        s += lo ? lo->str() : "-inf";
        s += ", ";
        s += hi ? hi->str() : "inf";
        s += hi_closed ? "]" : ")";
        return s;
    }
};

}  // namespace trigcert

#endif
