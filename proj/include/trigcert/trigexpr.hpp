#ifndef TRIGCERT_TRIGEXPR_HPP
#define TRIGCERT_TRIGEXPR_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trigcert/poly.hpp"

namespace trigcert {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, size_t offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

  private:
    size_t offset_;
};

/// Expression tree for trigonometric polynomials: rational constants, at most
/// one named parameter, sin(k*x)/cos(k*x) atoms with positive integer k, and
/// sums, products, integer powers, negation and division by a rational
/// constant. Immutable after construction.
struct TrigExpr {
    enum class Kind { Constant, Param, Sin, Cos, Add, Sub, Mul, Div, Pow, Neg };

    Kind kind;
    Rational value;       // Constant; divisor for Div
    unsigned frequency = 0;  // Sin / Cos
    std::string name;     // Param
    std::shared_ptr<const TrigExpr> lhs, rhs;
    unsigned exponent = 0;   // Pow
};

using ExprPtr = std::shared_ptr<const TrigExpr>;

struct ParseOptions {
    unsigned max_frequency = 64;
};

/// Recursive-descent parser for the expression grammar. Throws ParseError
/// with a byte offset on malformed input.
ExprPtr parse(std::string_view text, const ParseOptions& opts = {});

/// Canonical parenthesized rendering of the tree.
std::string to_string(const ExprPtr& e);

/// Name of the parameter appearing in e, empty if parameter-free.
std::string param_name(const ExprPtr& e);

/// Replaces every parameter node by the given constant.
ExprPtr substitute_param(const ExprPtr& e, const Rational& v);

/// Floating evaluation, used only by oracles and for witness display.
/// Throws std::invalid_argument if a parameter is present.
double eval_double(const ExprPtr& e, double x);

enum class TrigClass { PureCosine, PureSine, General };

/// Exact algebraic form P1(X) + sin(x) * P2(X) with X = cos(x). When the
/// expression mentions the parameter, p1/p2 coefficients are degree-<=1
/// polynomials in it and `parametric` is true.
struct MixedForm {
    ParamPoly p1, p2;
    bool parametric = false;
    std::string param;  // empty when parameter-free

    Poly p1_plain() const { return p1.to_poly(); }
    Poly p2_plain() const { return p2.to_poly(); }
};

/// Expands sin/cos multiples through Chebyshev polynomials and reduces all
/// sin-powers via sin^2 = 1 - cos^2. Exact; throws std::invalid_argument if
/// the parameter appears nonlinearly.
MixedForm normalize(const ExprPtr& e);

/// PureCosine iff p2 == 0 (the zero expression classifies PureCosine);
/// PureSine iff p1 == 0 and p2 != 0.
TrigClass classify(const MixedForm& m);

}  // namespace trigcert

#endif
