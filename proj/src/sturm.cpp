#include "trigcert/sturm.hpp"

#include <algorithm>
#include <stdexcept>

namespace trigcert {

SturmChain build_chain(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
    SturmChain chain;
    chain.source = p;
    if (p.degree() == 0) {
        chain.polys.push_back(p);
        return chain;
    }
    Poly p0 = squarefree_part(p);
    chain.polys.push_back(p0);
    if (p0.degree() == 0) return chain;
    chain.polys.push_back(primitive_part(p0.derivative()));

    // Primitive PRS. Scaling chain members is only sound by positive
    // constants, so the pseudo-remainder's lc(B)^(d+1) factor gets its sign
    // compensated explicitly.
    while (chain.polys.back().degree() >= 1) {
        const Poly& a = chain.polys[chain.polys.size() - 2];
        const Poly& b = chain.polys.back();
        const int delta = a.degree() - b.degree();
        const bool flip = b.leading().sign() < 0 && (delta + 1) % 2 == 1;
        Poly r = pseudo_rem(a, b);
        if (r.is_zero())
            throw std::logic_error("square-free Sturm chain hit a zero remainder");
        r = primitive_part(r);
        chain.polys.push_back(flip ? std::move(r) : -r);
    }
    return chain;
}

namespace {

int sign_at_point(const Poly& p, const ChainPoint& at) {
    if (p.is_zero()) return 0;
    switch (at.kind) {
        case ChainPoint::Finite:
            return p.eval(at.value).sign();
        case ChainPoint::PosInf:
            return p.leading().sign();
        case ChainPoint::NegInf:
            return p.degree() % 2 == 0 ? p.leading().sign() : -p.leading().sign();
    }
    return 0;
}

}  // namespace

int sign_variations(const SturmChain& c, const ChainPoint& at) {
    int variations = 0;
    int prev = 0;
    for (const Poly& p : c.polys) {
        const int s = sign_at_point(p, at);
        if (s == 0) continue;
        if (prev != 0 && s != prev) variations++;
        prev = s;
    }
    return variations;
}

int count_roots(const SturmChain& chain, const Interval& iv) {
    if (!iv.valid()) throw std::invalid_argument("invalid interval");
    const Poly& p = chain.source;
    if (iv.is_point()) return p.eval(*iv.lo).is_zero() ? 1 : 0;

    const ChainPoint lo = iv.lo ? ChainPoint::at(*iv.lo) : ChainPoint::neg_inf();
    const ChainPoint hi = iv.hi ? ChainPoint::at(*iv.hi) : ChainPoint::pos_inf();
    // Sturm's theorem counts distinct roots in (lo, hi]; correct the two
    // endpoints by direct evaluation.
    int count = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (iv.lo && iv.lo_closed && p.eval(*iv.lo).is_zero()) count++;
    if (iv.hi && !iv.hi_closed && p.eval(*iv.hi).is_zero()) count--;
    return count;
}

int count_roots(const Poly& p, const Interval& iv) {
    return count_roots(build_chain(p), iv);
}

Rational cauchy_root_bound(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("root bound of zero polynomial");
    Rational best(0);
    const Rational lead_abs = p.leading().abs();
    for (int i = 0; i < p.degree(); ++i) {
        Rational ratio = p.coeff(i).abs() / lead_abs;
        if (ratio > best) best = ratio;
    }
    return best + Rational(1);
}

std::vector<Interval> isolate_roots(const Poly& p, const Interval& iv, const IsolateOptions& opts) {
    if (p.is_zero()) throw std::invalid_argument("root isolation of zero polynomial");
    if (!iv.valid()) throw std::invalid_argument("invalid interval");

    std::vector<Interval> result;
    if (iv.is_point()) {
        if (p.eval(*iv.lo).is_zero()) result.push_back(Interval::point(*iv.lo));
        return result;
    }
    if (iv.lo && iv.lo_closed && p.eval(*iv.lo).is_zero())
        result.push_back(Interval::point(*iv.lo));

    const SturmChain chain = build_chain(p);
    const Rational bound = cauchy_root_bound(p);
    const Rational lo = iv.lo ? *iv.lo : -bound;
    const Rational hi = iv.hi ? *iv.hi : bound;
    const Rational max_width = pow2_inv(opts.width_log2);

    auto variations_at = [&](const Rational& x) { return sign_variations(chain, ChainPoint::at(x)); };

    // Work queue of half-open pieces (a, b] with precomputed variation counts.
    struct Piece {
        Rational a, b;
        int va, vb;
    };
    std::vector<Piece> stack;
    if (lo < hi) stack.push_back({lo, hi, variations_at(lo), variations_at(hi)});

    while (!stack.empty()) {
        Piece pc = std::move(stack.back());
        stack.pop_back();
        int roots = pc.va - pc.vb;
        if (roots <= 0) continue;
        if (roots == 1) {
            if (p.eval(pc.b).is_zero()) {
                // The only root in (a, b] is b itself.
                const bool excluded = iv.hi && pc.b == *iv.hi && !iv.hi_closed;
                if (!excluded) result.push_back(Interval::point(pc.b));
                continue;
            }
            if (pc.b - pc.a <= max_width) {
                Interval found;
                found.lo = pc.a;
                found.hi = pc.b;
                found.lo_closed = false;
                found.hi_closed = true;
                result.push_back(std::move(found));
                continue;
            }
        }
        Rational mid = (pc.a + pc.b) * Rational(1, 2);
        int vm = variations_at(mid);
        stack.push_back({pc.a, mid, pc.va, vm});
        stack.push_back({std::move(mid), pc.b, vm, pc.vb});
    }

    std::sort(result.begin(), result.end(),
              [](const Interval& x, const Interval& y) { return *x.lo < *y.lo; });
    return result;
}

}  // namespace trigcert
