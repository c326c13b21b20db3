#include "trigcert/trigexpr.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <sstream>

namespace trigcert {

namespace {

ExprPtr make(TrigExpr e) {
    return std::make_shared<const TrigExpr>(std::move(e));
}

ExprPtr make_const(Rational v) {
    TrigExpr e{};
    e.kind = TrigExpr::Kind::Constant;
    e.value = std::move(v);
    return make(std::move(e));
}

ExprPtr make_binary(TrigExpr::Kind k, ExprPtr l, ExprPtr r) {
    TrigExpr e{};
    e.kind = k;
    e.lhs = std::move(l);
    e.rhs = std::move(r);
    return make(std::move(e));
}

class Parser {
  public:
    Parser(std::string_view text, const ParseOptions& opts) : text_(text), opts_(opts) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return e;
    }

  private:
    std::string_view text_;
    const ParseOptions& opts_;
    size_t pos_ = 0;
    std::string seen_param_;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, size_t at) { throw ParseError(msg, at); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) pos_++;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            pos_++;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& what) {
        if (!consume(c)) fail("expected '" + std::string(1, c) + "' " + what);
    }

    mpz_class integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) pos_++;
        if (pos_ == start) fail("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) pos_++;
        return std::string(text_.substr(start, pos_ - start));
    }

    // expr := term (("+"|"-") term)*
    ExprPtr expr() {
        ExprPtr acc = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                pos_++;
                acc = make_binary(TrigExpr::Kind::Add, acc, term());
            } else if (c == '-') {
                pos_++;
                acc = make_binary(TrigExpr::Kind::Sub, acc, term());
            } else {
                return acc;
            }
        }
    }

    // term := factor (("*"|"/") factor)*
    ExprPtr term() {
        ExprPtr acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                pos_++;
                acc = make_binary(TrigExpr::Kind::Mul, acc, factor());
            } else if (c == '/') {
                pos_++;
                size_t at = pos_;
                ExprPtr d = factor();
                auto v = const_value(d);
                if (!v) fail_at("division only by constant-valued subexpressions", at);
                if (v->is_zero()) fail_at("division by zero", at);
                TrigExpr e{};
                e.kind = TrigExpr::Kind::Div;
                e.lhs = acc;
                e.value = *v;
                acc = make(std::move(e));
            } else {
                return acc;
            }
        }
    }

    // factor := base ("^" INT)?
    ExprPtr factor() {
        ExprPtr b = base();
        if (peek() == '^') {
            pos_++;
            mpz_class e = integer();
            if (!e.fits_uint_p() || e > 64) fail("exponent too large");
            TrigExpr node{};
            node.kind = TrigExpr::Kind::Pow;
            node.lhs = b;
            node.exponent = static_cast<unsigned>(e.get_ui());
            return make(std::move(node));
        }
        return b;
    }

    // base := INT | NAME | trig | "(" expr ")" | "-" base
    ExprPtr base() {
        char c = peek();
        if (c == '-') {
            pos_++;
            TrigExpr e{};
            e.kind = TrigExpr::Kind::Neg;
            e.lhs = base();
            return make(std::move(e));
        }
        if (c == '(') {
            pos_++;
            ExprPtr e = expr();
            expect(')', "to close parenthesis");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return make_const(Rational(integer(), mpz_class(1)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t at = pos_;
            std::string name = identifier();
            if (name == "sin" || name == "cos") return trig_atom(name == "sin");
            if (name == "x") fail_at("bare 'x' is not an expression; use sin(k*x)/cos(k*x)", at);
            if (name == "pi") fail_at("'pi' is not an expression token; use it in interval syntax", at);
            if (!seen_param_.empty() && seen_param_ != name)
                fail_at("a second parameter name '" + name + "' (already saw '" + seen_param_ + "')", at);
            seen_param_ = name;
            TrigExpr e{};
            e.kind = TrigExpr::Kind::Param;
            e.name = name;
            return make(std::move(e));
        }
        fail("expected a number, name, sin/cos, '(' or '-'");
    }

    // "(" INT? "*"? "x" ")"
    ExprPtr trig_atom(bool is_sin) {
        expect('(', "after sin/cos");
        size_t at = pos_;
        mpz_class k(1);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            k = integer();
            consume('*');
        }
        std::string var = identifier();
        if (var != "x" || !consume(')'))
            fail_at("unsupported argument: expected an integer multiple of x", at);
        if (k <= 0) fail_at("unsupported argument: frequency must be a positive integer", at);
        if (!k.fits_uint_p() || k > opts_.max_frequency)
            fail_at("frequency exceeds the maximum of " + std::to_string(opts_.max_frequency), at);
        TrigExpr e{};
        e.kind = is_sin ? TrigExpr::Kind::Sin : TrigExpr::Kind::Cos;
        e.frequency = static_cast<unsigned>(k.get_ui());
        return make(std::move(e));
    }

    // Exact value of a parameter-free, trig-free subtree; nullopt otherwise.
    static std::optional<Rational> const_value(const ExprPtr& e) {
        switch (e->kind) {
            case TrigExpr::Kind::Constant:
                return e->value;
            case TrigExpr::Kind::Param:
            case TrigExpr::Kind::Sin:
            case TrigExpr::Kind::Cos:
                return std::nullopt;
            case TrigExpr::Kind::Neg: {
                auto v = const_value(e->lhs);
                return v ? std::optional<Rational>(-*v) : std::nullopt;
            }
            case TrigExpr::Kind::Div: {
                auto v = const_value(e->lhs);
                return v ? std::optional<Rational>(*v / e->value) : std::nullopt;
            }
            case TrigExpr::Kind::Pow: {
                auto v = const_value(e->lhs);
                if (!v) return std::nullopt;
                Rational acc(1);
                for (unsigned i = 0; i < e->exponent; ++i) acc *= *v;
                return acc;
            }
            default: {
                auto l = const_value(e->lhs);
                auto r = const_value(e->rhs);
                if (!l || !r) return std::nullopt;
                if (e->kind == TrigExpr::Kind::Add) return *l + *r;
                if (e->kind == TrigExpr::Kind::Sub) return *l - *r;
                return *l * *r;
            }
        }
    }
};

}  // namespace

ExprPtr parse(std::string_view text, const ParseOptions& opts) {
    return Parser(text, opts).run();
}

std::string to_string(const ExprPtr& e) {
    std::ostringstream os;
    switch (e->kind) {
        case TrigExpr::Kind::Constant:
            os << e->value;
            break;
        case TrigExpr::Kind::Param:
            os << e->name;
            break;
        case TrigExpr::Kind::Sin:
        case TrigExpr::Kind::Cos:
            os << (e->kind == TrigExpr::Kind::Sin ? "sin(" : "cos(");
            if (e->frequency != 1) os << e->frequency << "*";
            os << "x)";
            break;
        case TrigExpr::Kind::Add:
            os << "(" << to_string(e->lhs) << " + " << to_string(e->rhs) << ")";
            break;
        case TrigExpr::Kind::Sub:
            os << "(" << to_string(e->lhs) << " - " << to_string(e->rhs) << ")";
            break;
        case TrigExpr::Kind::Mul:
            os << "(" << to_string(e->lhs) << "*" << to_string(e->rhs) << ")";
            break;
        case TrigExpr::Kind::Div:
            os << "(" << to_string(e->lhs) << "/" << e->value << ")";
            break;
        case TrigExpr::Kind::Pow:
            os << "(" << to_string(e->lhs) << ")^" << e->exponent;
            break;
        case TrigExpr::Kind::Neg:
            os << "-(" << to_string(e->lhs) << ")";
            break;
    }
    return os.str();
}

std::string param_name(const ExprPtr& e) {
    switch (e->kind) {
        case TrigExpr::Kind::Param:
            return e->name;
        case TrigExpr::Kind::Constant:
        case TrigExpr::Kind::Sin:
        case TrigExpr::Kind::Cos:
            return "";
        default: {
            if (e->lhs) {
                std::string n = param_name(e->lhs);
                if (!n.empty()) return n;
            }
            return e->rhs ? param_name(e->rhs) : "";
        }
    }
}

ExprPtr substitute_param(const ExprPtr& e, const Rational& v) {
    switch (e->kind) {
        case TrigExpr::Kind::Param:
            return make_const(v);
        case TrigExpr::Kind::Constant:
        case TrigExpr::Kind::Sin:
        case TrigExpr::Kind::Cos:
            return e;
        default: {
            TrigExpr copy(*e);
            if (e->lhs) copy.lhs = substitute_param(e->lhs, v);
            if (e->rhs) copy.rhs = substitute_param(e->rhs, v);
            return make(std::move(copy));
        }
    }
}

double eval_double(const ExprPtr& e, double x) {
    switch (e->kind) {
        case TrigExpr::Kind::Constant:
            return e->value.to_double();
        case TrigExpr::Kind::Param:
            throw std::invalid_argument("cannot numerically evaluate a parametric expression");
        case TrigExpr::Kind::Sin:
            return std::sin(e->frequency * x);
        case TrigExpr::Kind::Cos:
            return std::cos(e->frequency * x);
        case TrigExpr::Kind::Add:
            return eval_double(e->lhs, x) + eval_double(e->rhs, x);
        case TrigExpr::Kind::Sub:
            return eval_double(e->lhs, x) - eval_double(e->rhs, x);
        case TrigExpr::Kind::Mul:
            return eval_double(e->lhs, x) * eval_double(e->rhs, x);
        case TrigExpr::Kind::Div:
            return eval_double(e->lhs, x) / e->value.to_double();
        case TrigExpr::Kind::Pow:
            return std::pow(eval_double(e->lhs, x), e->exponent);
        case TrigExpr::Kind::Neg:
            return -eval_double(e->lhs, x);
    }
    return 0.0;
}

namespace {

// Value in the ring Q[alpha][c] + s * Q[alpha][c], with s^2 reduced to 1 - c^2.
struct SCForm {
    ParamPoly a;  // coefficient of s^0, a polynomial in c
    ParamPoly b;  // coefficient of s^1
};

SCForm sc_add(const SCForm& l, const SCForm& r) { return {l.a + r.a, l.b + r.b}; }
SCForm sc_sub(const SCForm& l, const SCForm& r) { return {l.a - r.a, l.b - r.b}; }

SCForm sc_mul(const SCForm& l, const SCForm& r) {
    // (a1 + s b1)(a2 + s b2) = a1 a2 + (1 - c^2) b1 b2 + s (a1 b2 + a2 b1)
    static const ParamPoly one_minus_c2 = ParamPoly::from_poly(
        Poly{Rational(1), Rational(0), Rational(-1)});
    return {l.a * r.a + one_minus_c2 * (l.b * r.b), l.a * r.b + r.a * l.b};
}

SCForm sc_eval(const ExprPtr& e) {
    switch (e->kind) {
        case TrigExpr::Kind::Constant:
            return {ParamPoly::from_poly(Poly(e->value)), ParamPoly()};
        case TrigExpr::Kind::Param:
            return {ParamPoly::constant(Poly::variable()), ParamPoly()};
        case TrigExpr::Kind::Sin:
            return {ParamPoly(), ParamPoly::from_poly(chebyshev_second(e->frequency - 1))};
        case TrigExpr::Kind::Cos:
            return {ParamPoly::from_poly(chebyshev_first(e->frequency)), ParamPoly()};
        case TrigExpr::Kind::Add:
            return sc_add(sc_eval(e->lhs), sc_eval(e->rhs));
        case TrigExpr::Kind::Sub:
            return sc_sub(sc_eval(e->lhs), sc_eval(e->rhs));
        case TrigExpr::Kind::Mul:
            return sc_mul(sc_eval(e->lhs), sc_eval(e->rhs));
        case TrigExpr::Kind::Div: {
            SCForm v = sc_eval(e->lhs);
            const Rational inv = e->value.inverse();
            return {v.a * inv, v.b * inv};
        }
        case TrigExpr::Kind::Pow: {
            SCForm base = sc_eval(e->lhs);
            SCForm acc{ParamPoly::from_poly(Poly{Rational(1)}), ParamPoly()};
            for (unsigned i = 0; i < e->exponent; ++i) acc = sc_mul(acc, base);
            return acc;
        }
        case TrigExpr::Kind::Neg: {
            SCForm v = sc_eval(e->lhs);
            return {-v.a, -v.b};
        }
    }
    return {};
}

}  // namespace

MixedForm normalize(const ExprPtr& e) {
    SCForm v = sc_eval(e);
    MixedForm m;
    m.p1 = std::move(v.a);
    m.p2 = std::move(v.b);
    const int pd = std::max(m.p1.param_degree(), m.p2.param_degree());
    if (pd > 1)
        throw std::invalid_argument("parameter appears nonlinearly (degree " +
                                    std::to_string(pd) + " after expansion)");
    m.parametric = pd == 1;
    m.param = m.parametric ? param_name(e) : "";
    return m;
}

TrigClass classify(const MixedForm& m) {
    if (m.p2.is_zero()) return TrigClass::PureCosine;
    if (m.p1.is_zero()) return TrigClass::PureSine;
    return TrigClass::General;
}

}  // namespace trigcert
