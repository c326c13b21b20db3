#include "trigcert/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace trigcert {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num) / mpq_class(den);
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("invalid rational literal: '" + std::string(s) + "'"); };
    size_t i = 0;
    auto digits = [&](size_t from) {
        size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) j++;
        if (j == from) bad();
        return j;
    };
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) i++;
    i = digits(i);
    if (i < s.size()) {
        if (s[i] != '/') bad();
        size_t j = digits(i + 1);
        if (j != s.size()) bad();
    }
    std::string cleaned(s[0] == '+' ? s.substr(1) : s);
    mpq_class q;
    if (q.set_str(cleaned, 10) != 0) bad();
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::from_double(double d) {
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), d);
    return Rational(q);
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    return q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

mpz_class floor_to_int(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

mpz_class ceil_to_int(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

Rational pow2_inv(unsigned k) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, k);
    return Rational(mpz_class(1), d);
}

}  // namespace trigcert
