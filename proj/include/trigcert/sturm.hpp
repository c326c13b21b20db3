#ifndef TRIGCERT_STURM_HPP
#define TRIGCERT_STURM_HPP

#include <vector>

#include "trigcert/interval.hpp"
#include "trigcert/poly.hpp"

namespace trigcert {

/// Sturm chain built from the square-free part of `source`, so that sign
/// variation differences count DISTINCT real roots. Consecutive members have
/// no common root and the last member is a nonzero constant.
struct SturmChain {
    std::vector<Poly> polys;
    Poly source;
};

/// Throws std::invalid_argument on the zero polynomial. Constants get a
/// degenerate single-element chain.
SturmChain build_chain(const Poly& p);

/// Evaluation point for sign variation counting.
struct ChainPoint {
    enum Kind { NegInf, Finite, PosInf } kind = Finite;
    Rational value;

    static ChainPoint neg_inf() { return {NegInf, Rational(0)}; }
    static ChainPoint pos_inf() { return {PosInf, Rational(0)}; }
    static ChainPoint at(Rational x) { return {Finite, std::move(x)}; }
};

/// Sign changes along the chain, zeros skipped. At +-infinity the sign of a
/// member is sign(leading) * (+-1)^degree.
int sign_variations(const SturmChain& c, const ChainPoint& at);

/// Exact number of distinct real roots of p in iv, honoring the endpoint
/// closed/open flags. Throws on the zero polynomial.
int count_roots(const Poly& p, const Interval& iv);
int count_roots(const SturmChain& chain, const Interval& iv);

/// 1 + max |a_i / a_n|; every real root r of p satisfies |r| < bound.
Rational cauchy_root_bound(const Poly& p);

struct IsolateOptions {
    unsigned width_log2 = 20;  // emitted intervals have width <= 2^-width_log2
};

/// Disjoint rational intervals, one per distinct real root of p in iv, each
/// containing exactly that root. Roots found exactly are returned as
/// degenerate point intervals. Infinite endpoints of iv are first replaced by
/// the Cauchy bound.
std::vector<Interval> isolate_roots(const Poly& p, const Interval& iv,
                                    const IsolateOptions& opts = {});

}  // namespace trigcert

#endif
