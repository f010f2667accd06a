#pragma once

// Log-concavity certification for piecewise-polynomial densities on a line.
// On each chamber the criterion is g''g - (g')^2 <= 0, certified by Sturm
// sign checking of (g')^2 - g g'' >= 0; at interior walls the density must
// be continuous, positive, and satisfy the derivative drop g_+' <= g_-'.
// The checks run on the open support; the support itself must be a single
// interval with no interior zeros.

#include <optional>
#include <stdexcept>
#include <string>

#include "piecewise.hpp"
#include "pushforward.hpp"
#include "sign_check.hpp"

namespace dhtk {

enum class LCStatus { LogConcave, StrictlyLogConcave, NotLogConcave };
enum class LCFailure { PieceFailure, WallFailure, SupportGap };

struct LogConcavityVerdict {
    LCStatus status = LCStatus::LogConcave;
    std::optional<Rational> witness_location;
    std::optional<LCFailure> witness_reason;

    bool ok() const { return status != LCStatus::NotLogConcave; }
    bool strict() const { return status == LCStatus::StrictlyLogConcave; }
};

namespace detail {

// Rational point at (or isolating) a zero of p inside (a, b). Exact rational
// roots on dyadic midpoints are hit exactly; otherwise the midpoint of a
// narrow isolating interval is returned.
inline Rational interior_zero_witness(const UniPoly& p, Rational a, Rational b) {
    SturmChain chain(p);
    for (int iter = 0; iter < 64; ++iter) {
        Rational m = (a + b) / Rational(2);
        if (p(m).is_zero())
            return m;
        if (chain.roots_open(a, m) > 0)
            b = m;
        else
            a = m;
    }
    return (a + b) / Rational(2);
}

}  // namespace detail

// Core check on a bare density; fails with the first offending location in
// left-to-right order.
inline LogConcavityVerdict logconcave_pieces(const PiecewisePoly& g) {
    LogConcavityVerdict out;
    if (g.is_zero())
        return out;  // empty support, vacuously log-concave

    const size_t pieces = g.piece_count();
    bool strict_everywhere = true;

    for (size_t i = 0; i < pieces; ++i) {
        auto [a, b] = g.piece_interval(i);
        const UniPoly& p = g.piece(i);

        // Support must be one interval: no interior zero pieces...
        if (p.is_zero()) {
            out.status = LCStatus::NotLogConcave;
            out.witness_location = (a + b) / Rational(2);
            out.witness_reason = LCFailure::SupportGap;
            return out;
        }

        // ...and no zeros inside a piece (the density must be positive on
        // the open support).
        auto sv = sign_on_interval(p, a, b);
        if (sv.negative_at)
            throw std::domain_error("logconcave: density is negative at t=" +
                                    sv.negative_at->str());
        if (SturmChain(p).roots_open(a, b) > 0) {
            out.status = LCStatus::NotLogConcave;
            out.witness_location = detail::interior_zero_witness(p, a, b);
            out.witness_reason = LCFailure::SupportGap;
            return out;
        }

        // Chamber criterion: (g')^2 - g g'' >= 0 on the closed piece.
        UniPoly dp = p.derivative();
        UniPoly q = dp * dp - p * p.derivative().derivative();
        auto qs = sign_on_interval(q, a, b);
        if (qs.negative_at) {
            out.status = LCStatus::NotLogConcave;
            out.witness_location = *qs.negative_at;
            out.witness_reason = LCFailure::PieceFailure;
            return out;
        }
        if (qs.kind == SignKind::Zero)
            strict_everywhere = false;  // log-linear piece

        // Wall conditions at the right breakpoint, while walls stay interior.
        if (i + 1 == pieces)
            continue;
        const Rational& wall = g.breakpoints()[i + 1];
        Rational lv = p(wall);
        Rational rv = g.piece(i + 1)(wall);
        if (lv != rv) {
            out.status = LCStatus::NotLogConcave;
            out.witness_location = wall;
            out.witness_reason = LCFailure::WallFailure;
            return out;
        }
        if (lv.is_zero()) {
            // Zero value between positive chambers: support is pinched.
            out.status = LCStatus::NotLogConcave;
            out.witness_location = wall;
            out.witness_reason = LCFailure::WallFailure;
            return out;
        }
        auto [dl, dr] = g.one_sided_derivatives(wall, 1);
        if (dr > dl) {
            out.status = LCStatus::NotLogConcave;
            out.witness_location = wall;
            out.witness_reason = LCFailure::WallFailure;
            return out;
        }
    }

    out.status = strict_everywhere ? LCStatus::StrictlyLogConcave : LCStatus::LogConcave;
    return out;
}

inline LogConcavityVerdict logconcave_on_line(const DHFunction& f) {
    return logconcave_pieces(f.density);
}

// Graham's wall inequality g_+'(a) <= g_-'(a) at a declared wall of f.
inline bool graham_wall_check(const DHFunction& f, const Rational& a) {
    bool is_wall = false;
    for (const auto& w : f.walls)
        is_wall = is_wall || w == a;
    if (!is_wall)
        throw std::invalid_argument("graham_wall_check: " + a.str() + " is not a wall");
    auto [dl, dr] = f.density.one_sided_derivatives(a, 1);
    return dr <= dl;
}

}  // namespace dhtk
