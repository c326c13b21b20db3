#ifndef TRIGCERT_POLY_HPP
#define TRIGCERT_POLY_HPP

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigcert/rational.hpp"

namespace trigcert {

/// Dense univariate polynomial over Rational. Coefficient i is the
/// coefficient of variable^i; the highest stored coefficient is nonzero.
/// The zero polynomial stores no coefficients and has degree kZeroDegree,
/// a distinguished sentinel that must never leak into degree arithmetic.
class Poly {
  public:
    static constexpr int kZeroDegree = -1;

    Poly() = default;
    explicit Poly(Rational constant);
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly variable();
    static Poly monomial(Rational c, int power);

    /// Parses the text form produced by str(): descending powers, explicit '*',
    /// rational coefficients as p/q. Throws std::invalid_argument.
    static Poly from_string(std::string_view text, std::string_view var);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& leading() const;  // throws on zero polynomial
    Rational coeff(int i) const;
    std::span<const Rational> coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Rational& s);
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Rational eval(const Rational& x) const;
    double eval_double(double x) const;
    Poly derivative() const;
    Poly compose(const Poly& inner) const;
    Poly pow(unsigned e) const;
    Poly monic() const;  // throws on zero polynomial

    std::string str(std::string_view var = "X") const;

  private:
    void normalize();
    std::vector<Rational> c_;
};

/// Quotient and remainder of exact rational division; deg(rem) < deg(b).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws std::domain_error("not divisible") on nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);
/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b, computed without
/// coefficient division. Requires deg a >= deg b >= 0.
Poly pseudo_rem(const Poly& a, const Poly& b);

/// Positive rational c such that p/c has coprime integer coefficients.
Rational content(const Poly& p);  // 0 for the zero polynomial
Poly primitive_part(const Poly& p);

/// Monic gcd via a primitive pseudo-remainder sequence. Throws if both zero.
Poly poly_gcd(const Poly& a, const Poly& b);

struct SquarefreeFactor {
    Poly factor;       // monic, square-free
    int multiplicity;  // >= 1
};
struct SquarefreeDecomposition {
    Rational constant;  // p == constant * prod factor^multiplicity
    std::vector<SquarefreeFactor> factors;
};
/// Yun's algorithm. Factors are monic, square-free and pairwise coprime.
SquarefreeDecomposition squarefree_decompose(const Poly& p);  // throws on zero

/// Monic product of the distinct factors of p.
Poly squarefree_part(const Poly& p);
/// Monic product of the odd-multiplicity factors of p; its roots are exactly
/// the points where p changes sign.
Poly odd_part(const Poly& p);

/// Chebyshev polynomials: cos(k x) = T_k(cos x), sin(k x) = sin(x) U_{k-1}(cos x).
Poly chebyshev_first(unsigned k);
Poly chebyshev_second(unsigned k);

/// Sylvester-matrix resultant by fraction-free (Bareiss) elimination.
/// Normalized so that resultant(X - a, X - b) == b - a. Throws on zero input.
Rational resultant(const Poly& p, const Poly& q);

/// Polynomial in one main variable whose coefficients are Polys in a single
/// parameter. The leading stored coefficient is not the zero Poly, but it may
/// vanish for specific parameter values; callers handle degree drops.
class ParamPoly {
  public:
    ParamPoly() = default;
    explicit ParamPoly(std::vector<Poly> coeffs);

    /// Lifts a scalar polynomial in the main variable (parameter-free coefficients).
    static ParamPoly from_poly(const Poly& p);
    /// Degree 0 in the main variable; the constant coefficient is a Poly in the parameter.
    static ParamPoly constant(const Poly& in_param);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Poly& leading() const;
    Poly coeff(int i) const;
    std::span<const Poly> coeffs() const { return c_; }

    /// Max degree in the parameter over all coefficients; kZeroDegree if zero.
    int param_degree() const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(const ParamPoly& a, const Rational& s);
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.c_ == b.c_; }

    ParamPoly derivative_main() const;
    /// Substitutes a rational parameter value; returns a Poly in the main variable.
    Poly substitute_param(const Rational& alpha) const;
    /// Evaluates the main variable at t0; returns a Poly in the parameter.
    Poly eval_main(const Rational& t0) const;
    /// Requires param_degree() == 0.
    Poly to_poly() const;

  private:
    void normalize();
    std::vector<Poly> c_;
};

/// Discriminant in the main variable: the resultant of p and dp/dT over the
/// parameter ring by fraction-free elimination, divided by the leading
/// coefficient and normalized to primitive with positive leading coefficient.
/// Returns the zero Poly when it vanishes identically. Throws
/// std::invalid_argument when degree in the main variable is < 2.
Poly discriminant_param(const ParamPoly& p);

}  // namespace trigcert

#endif
