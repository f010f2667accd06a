#pragma once

// Piecewise polynomials on rational breakpoints: one polynomial per open
// interval between consecutive breakpoints, identically zero outside the
// first/last breakpoint. Canonical form (enforced on construction) strips
// zero pieces at both ends and merges adjacent intervals carrying the same
// polynomial, so equality of canonical representations is equality of
// functions.
//
// Breakpoint evaluation convention: eval returns the right-limit value.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "interval.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace dhtk {

class PiecewisePoly {
public:
    PiecewisePoly() = default;  // the zero function

    PiecewisePoly(std::vector<Rational> breakpoints, std::vector<UniPoly> pieces)
        : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
        if (breaks_.empty()) {
            if (!pieces_.empty())
                throw std::invalid_argument("PiecewisePoly: pieces without breakpoints");
        } else if (pieces_.size() + 1 != breaks_.size()) {
            throw std::invalid_argument("PiecewisePoly: need one piece per breakpoint gap");
        }
        for (size_t i = 1; i < breaks_.size(); ++i)
            if (!(breaks_[i - 1] < breaks_[i]))
                throw std::invalid_argument("PiecewisePoly: breakpoints not strictly increasing");
        canonicalize();
    }

    static PiecewisePoly single_piece(const Rational& lo, const Rational& hi, UniPoly p) {
        return PiecewisePoly({lo, hi}, {std::move(p)});
    }

    bool is_zero() const { return pieces_.empty(); }
    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<UniPoly>& pieces() const { return pieces_; }
    size_t piece_count() const { return pieces_.size(); }

    const UniPoly& piece(size_t i) const { return pieces_.at(i); }
    std::pair<Rational, Rational> piece_interval(size_t i) const {
        return {breaks_.at(i), breaks_.at(i + 1)};
    }

    // Closed support [first, last] breakpoint; disengaged for the zero function.
    std::optional<std::pair<Rational, Rational>> support() const {
        if (is_zero())
            return std::nullopt;
        return std::make_pair(breaks_.front(), breaks_.back());
    }

    // Right-limit convention at breakpoints; zero outside [first, last].
    Rational operator()(const Rational& t) const {
        auto idx = piece_right_of(t);
        if (!idx)
            return Rational(0);
        return pieces_[*idx](t);
    }

    PiecewisePoly derivative() const {
        std::vector<UniPoly> d;
        d.reserve(pieces_.size());
        for (const auto& p : pieces_)
            d.push_back(p.derivative());
        if (breaks_.empty())
            return PiecewisePoly();
        return PiecewisePoly(breaks_, std::move(d));
    }

    // Exact definite integral over I clipped to the support. The
    // representation always has compact support, so an unbounded I is fine.
    Rational integrate(const Interval& I) const {
        if (is_zero())
            return Rational(0);
        Rational lo = I.lo ? max(*I.lo, breaks_.front()) : breaks_.front();
        Rational hi = I.hi ? min(*I.hi, breaks_.back()) : breaks_.back();
        if (lo >= hi)
            return Rational(0);
        Rational total(0);
        for (size_t i = 0; i < pieces_.size(); ++i) {
            Rational a = max(lo, breaks_[i]);
            Rational b = min(hi, breaks_[i + 1]);
            if (a < b)
                total += pieces_[i].integral(a, b);
        }
        return total;
    }

    Rational mass() const { return integrate(Interval::whole_line()); }

    // (left, right) k-th derivative at b, computed from the adjacent pieces.
    // Outside the closed support both sides are zero by convention.
    std::pair<Rational, Rational> one_sided_derivatives(const Rational& b, int order) const {
        if (order < 0)
            throw std::invalid_argument("one_sided_derivatives: negative order");
        Rational left(0), right(0);
        if (auto i = piece_left_of(b))
            left = pieces_[*i].nth_derivative(order)(b);
        if (auto i = piece_right_of(b))
            right = pieces_[*i].nth_derivative(order)(b);
        return {left, right};
    }

    PiecewisePoly operator+(const PiecewisePoly& o) const {
        if (is_zero())
            return o;
        if (o.is_zero())
            return *this;
        std::vector<Rational> cuts;
        cuts.reserve(breaks_.size() + o.breaks_.size());
        std::merge(breaks_.begin(), breaks_.end(), o.breaks_.begin(), o.breaks_.end(),
                   std::back_inserter(cuts));
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        std::vector<UniPoly> sum;
        sum.reserve(cuts.size() - 1);
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            UniPoly p = piece_covering(cuts[i], cuts[i + 1]);
            UniPoly q = o.piece_covering(cuts[i], cuts[i + 1]);
            sum.push_back(p + q);
        }
        return PiecewisePoly(std::move(cuts), std::move(sum));
    }

    PiecewisePoly operator*(const Rational& a) const {
        if (a.is_zero() || is_zero())
            return PiecewisePoly();
        std::vector<UniPoly> p;
        p.reserve(pieces_.size());
        for (const auto& q : pieces_)
            p.push_back(q * a);
        return PiecewisePoly(breaks_, std::move(p));
    }

    // Restriction to [lo, hi]: equal to *this there, zero outside.
    PiecewisePoly restrict_to(const Rational& lo, const Rational& hi) const {
        if (is_zero() || lo >= hi)
            return PiecewisePoly();
        Rational a = max(lo, breaks_.front());
        Rational b = min(hi, breaks_.back());
        if (a >= b)
            return PiecewisePoly();
        std::vector<Rational> cuts;
        cuts.push_back(a);
        for (const auto& t : breaks_)
            if (a < t && t < b)
                cuts.push_back(t);
        cuts.push_back(b);
        std::vector<UniPoly> ps;
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            ps.push_back(piece_covering(cuts[i], cuts[i + 1]));
        return PiecewisePoly(std::move(cuts), std::move(ps));
    }

    // g(t) -> g(a*t + b) with a > 0: exact axis reparametrization.
    PiecewisePoly compose_affine(const Rational& a, const Rational& b) const {
        if (a.sign() <= 0)
            throw std::invalid_argument("compose_affine: need positive scale");
        if (is_zero())
            return PiecewisePoly();
        std::vector<Rational> nb;
        nb.reserve(breaks_.size());
        for (const auto& t : breaks_)
            nb.push_back((t - b) / a);
        std::vector<UniPoly> np;
        np.reserve(pieces_.size());
        for (const auto& p : pieces_)
            np.push_back(p.compose_affine(a, b));
        return PiecewisePoly(std::move(nb), std::move(np));
    }

    // Translation t -> t + c of the graph (support shifts right by c).
    PiecewisePoly shifted(const Rational& c) const {
        if (is_zero())
            return PiecewisePoly();
        std::vector<Rational> nb;
        nb.reserve(breaks_.size());
        for (const auto& t : breaks_)
            nb.push_back(t + c);
        std::vector<UniPoly> np;
        np.reserve(pieces_.size());
        for (const auto& p : pieces_)
            np.push_back(p.compose_affine(Rational(1), -c));
        return PiecewisePoly(std::move(nb), std::move(np));
    }

    bool operator==(const PiecewisePoly& o) const {
        return breaks_ == o.breaks_ && pieces_ == o.pieces_;
    }
    bool operator!=(const PiecewisePoly& o) const { return !(*this == o); }

    // Index of the piece whose open interval lies immediately right of t
    // (t in [b_i, b_{i+1}) maps to i); disengaged at/right of the last
    // breakpoint or left of the first.
    std::optional<size_t> piece_right_of(const Rational& t) const {
        if (is_zero() || t < breaks_.front() || t >= breaks_.back())
            return std::nullopt;
        size_t i = static_cast<size_t>(
            std::upper_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin());
        return i - 1;
    }

    // Mirror image: piece immediately left of t (t in (b_i, b_{i+1}] maps to i).
    std::optional<size_t> piece_left_of(const Rational& t) const {
        if (is_zero() || t <= breaks_.front() || t > breaks_.back())
            return std::nullopt;
        size_t i = static_cast<size_t>(
            std::lower_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin());
        return i - 1;
    }

private:
    // Polynomial of the function on (a, b), assuming no breakpoint lies
    // strictly between a and b.
    UniPoly piece_covering(const Rational& a, const Rational& b) const {
        if (is_zero() || b <= breaks_.front() || a >= breaks_.back())
            return UniPoly();
        auto idx = piece_right_of(a);
        return idx ? pieces_[*idx] : UniPoly();
    }

    void canonicalize() {
        if (breaks_.empty())
            return;
        // Merge adjacent gaps carrying identical polynomials.
        std::vector<Rational> nb;
        std::vector<UniPoly> np;
        nb.push_back(breaks_.front());
        for (size_t i = 0; i < pieces_.size(); ++i) {
            if (!np.empty() && np.back() == pieces_[i]) {
                nb.back() = breaks_[i + 1];
                continue;
            }
            np.push_back(pieces_[i]);
            nb.push_back(breaks_[i + 1]);
        }
        // Trim zero pieces at the ends.
        size_t lo = 0, hi = np.size();
        while (lo < hi && np[lo].is_zero()) ++lo;
        while (hi > lo && np[hi - 1].is_zero()) --hi;
        if (lo == hi) {
            breaks_.clear();
            pieces_.clear();
            return;
        }
        pieces_.assign(np.begin() + static_cast<long>(lo), np.begin() + static_cast<long>(hi));
        breaks_.assign(nb.begin() + static_cast<long>(lo), nb.begin() + static_cast<long>(hi) + 1);
    }

    std::vector<Rational> breaks_;
    std::vector<UniPoly> pieces_;
};

inline PiecewisePoly operator*(const Rational& a, const PiecewisePoly& f) { return f * a; }

}  // namespace dhtk
