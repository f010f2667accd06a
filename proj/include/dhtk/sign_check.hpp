#pragma once

// Exact sign certification of a univariate polynomial over a bounded rational
// interval, via Sturm-sequence root counting plus sample-point evaluation.
// The chain is built from the squarefree part, and every element is reduced
// to primitive integer coefficients (content divided out) after each
// remainder step to keep coefficient growth in check.

#include <optional>
#include <stdexcept>
#include <vector>

#include "interval.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace dhtk {

enum class SignKind { Zero, NonNegative, NonPositive, Mixed };

// For Mixed both witnesses are present; for NonNegative/NonPositive the
// matching one-sided witness is present (a point where p is strictly
// positive resp. negative).
struct SignVerdict {
    SignKind kind = SignKind::Zero;
    std::optional<Rational> positive_at;
    std::optional<Rational> negative_at;
};

namespace detail {

// Remainder of a by b over Q; b nonzero.
inline UniPoly poly_rem(UniPoly a, const UniPoly& b) {
    if (b.is_zero())
        throw std::domain_error("poly_rem: division by zero polynomial");
    const int db = *b.degree();
    const Rational lead = b.coeff(db);
    while (!a.is_zero() && *a.degree() >= db) {
        const int da = *a.degree();
        const Rational factor = a.coeff(da) / lead;
        a = a - b * UniPoly::monomial(da - db, factor);
    }
    return a;
}

inline UniPoly poly_quot(UniPoly a, const UniPoly& b) {
    if (b.is_zero())
        throw std::domain_error("poly_quot: division by zero polynomial");
    const int db = *b.degree();
    const Rational lead = b.coeff(db);
    UniPoly q;
    while (!a.is_zero() && *a.degree() >= db) {
        const int da = *a.degree();
        UniPoly term = UniPoly::monomial(da - db, a.coeff(da) / lead);
        q = q + term;
        a = a - b * term;
    }
    return q;
}

// Scale to integer coefficients with content 1, preserving sign.
inline UniPoly primitive_part(const UniPoly& p) {
    if (p.is_zero())
        return p;
    BigInt den_lcm = 1;
    for (const auto& c : p.coeffs())
        if (!c.is_zero())
            den_lcm = lcm(den_lcm, c.denominator());
    BigInt num_gcd = 0;
    for (const auto& c : p.coeffs())
        if (!c.is_zero())
            num_gcd = gcd(num_gcd, c.numerator() * (den_lcm / c.denominator()));
    return p * Rational(den_lcm, num_gcd);
}

inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = primitive_part(poly_rem(a, b));
        a = b;
        b = r;
    }
    return primitive_part(a);
}

inline UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero() || *p.degree() == 0)
        return primitive_part(p);
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.is_zero() || *g.degree() == 0)
        return primitive_part(p);
    return primitive_part(poly_quot(p, g));
}

}  // namespace detail

// Sturm chain of the squarefree part of p: counts distinct real roots.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& p) {
        UniPoly s = detail::squarefree_part(p);
        if (s.is_zero())
            return;
        chain_.push_back(s);
        if (*s.degree() >= 1) {
            chain_.push_back(detail::primitive_part(s.derivative()));
            while (true) {
                const UniPoly& prev = chain_[chain_.size() - 2];
                const UniPoly& cur = chain_.back();
                UniPoly r = detail::primitive_part(-detail::poly_rem(prev, cur));
                if (r.is_zero())
                    break;
                chain_.push_back(std::move(r));
            }
        }
    }

    bool zero_polynomial() const { return chain_.empty(); }

    bool is_root(const Rational& x) const {
        return !chain_.empty() && chain_.front()(x).is_zero();
    }

    // Number of distinct roots in (a, b].
    long roots_half_open(const Rational& a, const Rational& b) const {
        if (chain_.empty() || b <= a)
            return 0;
        return variations(a) - variations(b);
    }

    long roots_open(const Rational& a, const Rational& b) const {
        long n = roots_half_open(a, b);
        if (n > 0 && is_root(b))
            --n;
        return n;
    }

private:
    long variations(const Rational& x) const {
        long v = 0;
        int last = 0;
        for (const auto& s : chain_) {
            int sg = s(x).sign();
            if (sg == 0)
                continue;
            if (last != 0 && sg != last)
                ++v;
            last = sg;
        }
        return v;
    }

    std::vector<UniPoly> chain_;
};

namespace detail {

struct SignSamples {
    std::optional<Rational> pos, neg;

    void record(const UniPoly& p, const Rational& x) {
        int s = p(x).sign();
        if (s > 0 && !pos)
            pos = x;
        else if (s < 0 && !neg)
            neg = x;
    }
};

// Collects the sign of p on every maximal root-free open subinterval of
// (a, b). Terminates because subdivision stops as soon as an interval
// holds at most one root.
inline void explore_signs(const UniPoly& p, const SturmChain& chain, const Rational& a,
                          const Rational& b, SignSamples& out) {
    if (!(a < b))
        return;
    long n = chain.roots_open(a, b);
    if (n == 0) {
        out.record(p, (a + b) / Rational(2));
        return;
    }
    if (n == 1) {
        // One root r in (a,b): sample once on each side of it.
        Rational step = (b - a) / Rational(2);
        while (true) {
            Rational c = a + step;
            if (chain.roots_half_open(a, c) == 0) {
                out.record(p, c);
                break;
            }
            step = step / Rational(2);
        }
        step = (b - a) / Rational(2);
        while (true) {
            Rational c = b - step;
            if (chain.roots_open(c, b) == 0 && !chain.is_root(c)) {
                out.record(p, c);
                break;
            }
            step = step / Rational(2);
        }
        return;
    }
    Rational m = (a + b) / Rational(2);
    out.record(p, m);
    explore_signs(p, chain, a, m, out);
    explore_signs(p, chain, m, b, out);
}

}  // namespace detail

// Exact verdict for the sign of p on a bounded interval with rational
// endpoints. Endpoint values participate only when the end is closed.
inline SignVerdict sign_on_interval(const UniPoly& p, const Interval& I) {
    if (!I.bounded())
        throw std::invalid_argument("sign_on_interval: interval must be bounded");
    if (p.is_zero())
        return {SignKind::Zero, std::nullopt, std::nullopt};

    const Rational lo = *I.lo, hi = *I.hi;
    detail::SignSamples samples;
    if (I.lo_closed)
        samples.record(p, lo);
    if (I.hi_closed && !(lo == hi))
        samples.record(p, hi);
    if (lo < hi) {
        SturmChain chain(p);
        detail::explore_signs(p, chain, lo, hi, samples);
    }

    SignVerdict v;
    v.positive_at = samples.pos;
    v.negative_at = samples.neg;
    if (samples.pos && samples.neg)
        v.kind = SignKind::Mixed;
    else if (samples.pos)
        v.kind = SignKind::NonNegative;
    else if (samples.neg)
        v.kind = SignKind::NonPositive;
    else
        v.kind = SignKind::Zero;
    return v;
}

inline SignVerdict sign_on_interval(const UniPoly& p, const Rational& lo, const Rational& hi) {
    return sign_on_interval(p, Interval::closed(lo, hi));
}

}  // namespace dhtk
