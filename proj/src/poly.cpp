#include "trigcert/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace trigcert {

Poly::Poly(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::variable() {
    return Poly{Rational(0), Rational(1)};
}

Poly Poly::monomial(Rational c, int power) {
    if (power < 0) throw std::invalid_argument("negative monomial power");
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(static_cast<size_t>(power) + 1, Rational(0));
    v.back() = std::move(c);
    return Poly(std::move(v));
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Rational& s) {
    if (s.is_zero()) return Poly();
    Poly r(a);
    for (auto& c : r.c_) c *= s;
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

double Poly::eval_double(double x) const {
    double acc = 0.0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> out(c_.size() - 1, Rational(0));
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(out));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * inner + Poly(c_[i]);
    return acc;
}

Poly Poly::pow(unsigned e) const {
    Poly base(*this);
    Poly acc{Rational(1)};
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

Poly Poly::monic() const {
    return *this * leading().inverse();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q, r(a);
    const Rational lcb_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Poly t = Poly::monomial(r.leading() * lcb_inv, r.degree() - b.degree());
        q += t;
        r -= t * b;
    }
    return {std::move(q), std::move(r)};
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("not divisible");
    return q;
}

Poly pseudo_rem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    if (a.degree() < b.degree()) throw std::invalid_argument("pseudo_rem requires deg a >= deg b");
    const Rational& lcb = b.leading();
    Poly r(a);
    int e = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Poly t = Poly::monomial(r.leading(), r.degree() - b.degree());
        r = r * lcb - t * b;
        e--;
    }
    for (; e > 0; e--) r = r * lcb;
    return r;
}

Rational content(const Poly& p) {
    if (p.is_zero()) return Rational(0);
    mpz_class den_lcm(1);
    for (const Rational& c : p.coeffs())
        if (!c.is_zero()) den_lcm = lcm(den_lcm, c.den());
    mpz_class num_gcd(0);
    for (const Rational& c : p.coeffs()) {
        if (c.is_zero()) continue;
        mpz_class n = c.num() * (den_lcm / c.den());
        num_gcd = gcd(num_gcd, n);
    }
    return Rational(num_gcd, den_lcm);  // num_gcd > 0 via mpz_gcd
}

Poly primitive_part(const Poly& p) {
    if (p.is_zero()) return p;
    return p * content(p).inverse();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    Poly A = primitive_part(a);
    Poly B = primitive_part(b);
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        if (B.degree() == 0) return Poly{Rational(1)};
        Poly r = pseudo_rem(A, B);
        if (!r.is_zero()) r = primitive_part(r);
        A = std::move(B);
        B = std::move(r);
    }
    return A.monic();
}

SquarefreeDecomposition squarefree_decompose(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("square-free decomposition of zero polynomial");
    SquarefreeDecomposition out;
    out.constant = p.leading();
    if (p.degree() == 0) return out;

    // Yun's algorithm on the monic part.
    Poly pm = p.monic();
    Poly dp = pm.derivative();
    Poly g = poly_gcd(pm, dp);
    if (g.degree() == 0) {
        out.factors.push_back({pm, 1});
        return out;
    }
    Poly w = exact_div(pm, g);
    Poly y = exact_div(dp, g);
    Poly z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        Poly gi = poly_gcd(w, z);
        if (gi.degree() > 0) out.factors.push_back({gi, i});
        w = exact_div(w, gi);
        y = exact_div(z, gi);
        z = y - w.derivative();
        i++;
    }
    return out;
}

Poly squarefree_part(const Poly& p) {
    auto dec = squarefree_decompose(p);
    Poly out{Rational(1)};
    for (const auto& f : dec.factors) out = out * f.factor;
    return out;
}

Poly odd_part(const Poly& p) {
    auto dec = squarefree_decompose(p);
    Poly out{Rational(1)};
    for (const auto& f : dec.factors)
        if (f.multiplicity % 2 == 1) out = out * f.factor;
    return out;
}

Poly chebyshev_first(unsigned k) {
    Poly prev{Rational(1)};
    if (k == 0) return prev;
    Poly cur = Poly::variable();
    const Poly two_x = Poly::variable() * Rational(2);
    for (unsigned i = 1; i < k; ++i) {
        Poly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly chebyshev_second(unsigned k) {
    Poly prev{Rational(1)};
    if (k == 0) return prev;
    Poly cur = Poly::variable() * Rational(2);
    const Poly two_x = Poly::variable() * Rational(2);
    for (unsigned i = 1; i < k; ++i) {
        Poly next = two_x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

inline Rational ring_mul(const Rational& a, const Rational& b) { return a * b; }
inline Rational ring_sub(const Rational& a, const Rational& b) { return a - b; }
inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline bool ring_is_zero(const Rational& a) { return a.is_zero(); }
inline Poly ring_mul(const Poly& a, const Poly& b) { return a * b; }
inline Poly ring_sub(const Poly& a, const Poly& b) { return a - b; }
inline Poly ring_exact_div(const Poly& a, const Poly& b) { return exact_div(a, b); }
inline bool ring_is_zero(const Poly& a) { return a.is_zero(); }

// Fraction-free Gaussian elimination; the divisions are exact in the entry ring.
template <class T>
T bareiss_determinant(std::vector<std::vector<T>> m, T one) {
    const size_t n = m.size();
    if (n == 0) return one;
    int sign = 1;
    T prev = std::move(one);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ring_is_zero(m[k][k])) {
            size_t pivot = k + 1;
            while (pivot < n && ring_is_zero(m[pivot][k])) pivot++;
            if (pivot == n) return T{};
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = ring_exact_div(
                    ring_sub(ring_mul(m[k][k], m[i][j]), ring_mul(m[i][k], m[k][j])), prev);
            }
            m[i][k] = T{};
        }
        prev = m[k][k];
    }
    T det = std::move(m[n - 1][n - 1]);
    return sign < 0 ? ring_sub(T{}, det) : det;
}

// Sylvester matrix with the q-block on top, so that the determinant equals
// lc(q)^deg(p) * prod p(beta) over the roots beta of q.
template <class T, class CoeffFnP, class CoeffFnQ>
std::vector<std::vector<T>> sylvester(int deg_p, int deg_q, CoeffFnP p_coeff, CoeffFnQ q_coeff) {
    const size_t n = static_cast<size_t>(deg_p + deg_q);
    std::vector<std::vector<T>> m(n, std::vector<T>(n, T{}));
    for (int r = 0; r < deg_p; ++r)
        for (int j = 0; j <= deg_q; ++j) m[static_cast<size_t>(r)][static_cast<size_t>(r + j)] = q_coeff(deg_q - j);
    for (int r = 0; r < deg_q; ++r)
        for (int j = 0; j <= deg_p; ++j)
            m[static_cast<size_t>(deg_p + r)][static_cast<size_t>(r + j)] = p_coeff(deg_p - j);
    return m;
}

}  // namespace

Rational resultant(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    const int n = p.degree(), m = q.degree();
    if (n == 0 && m == 0) return Rational(1);
    if (n == 0) {
        Rational acc(1);
        for (int i = 0; i < m; ++i) acc *= p.leading();
        return acc;
    }
    if (m == 0) {
        Rational acc(1);
        for (int i = 0; i < n; ++i) acc *= q.leading();
        return acc;
    }
    auto mat = sylvester<Rational>(n, m, [&](int i) { return p.coeff(i); },
                                   [&](int i) { return q.coeff(i); });
    return bareiss_determinant(std::move(mat), Rational(1));
}

ParamPoly::ParamPoly(std::vector<Poly> coeffs) : c_(std::move(coeffs)) {
    normalize();
}

void ParamPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ParamPoly ParamPoly::from_poly(const Poly& p) {
    std::vector<Poly> v;
    v.reserve(static_cast<size_t>(p.degree() + 1));
    for (const Rational& c : p.coeffs()) v.emplace_back(c);
    return ParamPoly(std::move(v));
}

ParamPoly ParamPoly::constant(const Poly& in_param) {
    return ParamPoly(std::vector<Poly>{in_param});
}

const Poly& ParamPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly ParamPoly::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return Poly();
    return c_[static_cast<size_t>(i)];
}

int ParamPoly::param_degree() const {
    int d = Poly::kZeroDegree;
    for (const Poly& c : c_) d = std::max(d, c.degree());
    return d;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return ParamPoly();
    std::vector<Poly> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return ParamPoly(std::move(out));
}

ParamPoly operator*(const ParamPoly& a, const Rational& s) {
    ParamPoly r(a);
    for (auto& c : r.c_) c = c * s;
    r.normalize();
    return r;
}

ParamPoly ParamPoly::derivative_main() const {
    if (c_.size() <= 1) return ParamPoly();
    std::vector<Poly> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return ParamPoly(std::move(out));
}

Poly ParamPoly::substitute_param(const Rational& alpha) const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const Poly& c : c_) out.push_back(c.eval(alpha));
    return Poly(std::move(out));
}

Poly ParamPoly::eval_main(const Rational& t0) const {
    Poly acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * t0 + c_[i];
    return acc;
}

Poly ParamPoly::to_poly() const {
    if (param_degree() > 0) throw std::domain_error("parametric polynomial where scalar expected");
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const Poly& c : c_) out.push_back(c.coeff(0));
    return Poly(std::move(out));
}

Poly discriminant_param(const ParamPoly& p) {
    if (p.degree() < 2) throw std::invalid_argument("discriminant requires degree >= 2");
    const ParamPoly dp = p.derivative_main();
    const int n = p.degree(), m = dp.degree();
    auto mat = sylvester<Poly>(n, m, [&](int i) { return p.coeff(i); },
                               [&](int i) { return dp.coeff(i); });
    Poly det = bareiss_determinant(std::move(mat), Poly{Rational(1)});
    if (det.is_zero()) return det;
    // Res(p, p') carries a factor lc(p); dividing it out gives the textbook
    // discriminant, always exactly.
    Poly disc = exact_div(det, p.leading());
    Poly prim = primitive_part(disc);
    if (prim.leading().sign() < 0) prim = -prim;
    return prim;
}

// ---------------------------------------------------------------------------
// Text form: descending powers, explicit '*', coefficients as p/q.

std::string Poly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational c = coeff(i);
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        const Rational ac = c.abs();
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (i == 0) {
            os << ac.str();
        } else {
            if (!ac.is_one()) os << ac.str() << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

namespace {

struct PolyScanner {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) +
                                    ": " + what);
    }
    std::string digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) pos++;
        if (pos == start) fail("expected digits");
        return std::string(text.substr(start, pos - start));
    }
    Rational rational() {
        std::string n = digits();
        if (peek() == '/') {
            pos++;
            std::string d = digits();
            return Rational::from_string(n + "/" + d);
        }
        return Rational::from_string(n);
    }
    bool try_match(std::string_view word) {
        skip_ws();
        if (text.substr(pos, word.size()) != word) return false;
        size_t after = pos + word.size();
        if (after < text.size() && (std::isalnum(static_cast<unsigned char>(text[after])) || text[after] == '_'))
            return false;
        pos = after;
        return true;
    }
};

}  // namespace

Poly Poly::from_string(std::string_view text, std::string_view var) {
    PolyScanner sc{text};
    Poly result;
    bool first = true;
    while (true) {
        int sign = 1;
        if (first) {
            if (sc.peek() == '-') { sign = -1; sc.pos++; }
            else if (sc.peek() == '+') sc.pos++;
        } else {
            char c = sc.peek();
            if (c == '+') sc.pos++;
            else if (c == '-') { sign = -1; sc.pos++; }
            else sc.fail("expected '+' or '-'");
        }
        first = false;

        Rational coef(1);
        int power = 0;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            coef = sc.rational();
            if (sc.peek() == '*') {
                sc.pos++;
                if (!sc.try_match(var)) sc.fail("expected variable '" + std::string(var) + "'");
                power = 1;
                if (sc.peek() == '^') {
                    sc.pos++;
                    power = std::stoi(sc.digits());
                }
            }
        } else if (sc.try_match(var)) {
            power = 1;
            if (sc.peek() == '^') {
                sc.pos++;
                power = std::stoi(sc.digits());
            }
        } else {
            sc.fail("expected coefficient or variable");
        }
        result += Poly::monomial(sign < 0 ? -coef : coef, power);
        if (sc.eof()) break;
    }
    return result;
}

}  // namespace trigcert
