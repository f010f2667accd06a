#pragma once

// Rational intervals with optional infinite ends. Degenerate point intervals
// are only representable as closed.

#include <optional>
#include <stdexcept>

#include "rational.hpp"

namespace dhtk {

struct Interval {
    std::optional<Rational> lo;  // disengaged = -infinity
    std::optional<Rational> hi;  // disengaged = +infinity
    bool lo_closed = true;
    bool hi_closed = true;

    static Interval closed(const Rational& a, const Rational& b) {
        check_order(a, b);
        return Interval{a, b, true, true};
    }

    static Interval open(const Rational& a, const Rational& b) {
        check_order(a, b);
        if (a == b)
            throw std::invalid_argument("Interval: point intervals must be closed");
        return Interval{a, b, false, false};
    }

    static Interval point(const Rational& a) { return Interval{a, a, true, true}; }
    static Interval whole_line() { return Interval{std::nullopt, std::nullopt, false, false}; }
    static Interval at_least(const Rational& a) { return Interval{a, std::nullopt, true, false}; }
    static Interval at_most(const Rational& b) { return Interval{std::nullopt, b, false, true}; }

    bool bounded() const { return lo.has_value() && hi.has_value(); }
    bool is_point() const { return bounded() && *lo == *hi; }

    bool contains(const Rational& x) const {
        if (lo && (x < *lo || (x == *lo && !lo_closed)))
            return false;
        if (hi && (x > *hi || (x == *hi && !hi_closed)))
            return false;
        return true;
    }

private:
    static void check_order(const Rational& a, const Rational& b) {
        if (a > b)
            throw std::invalid_argument("Interval: lo > hi");
    }
};

}  // namespace dhtk
