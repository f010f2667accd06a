#pragma once

// Dense univariate polynomials with exact rational coefficients, stored in
// ascending degree with trailing zeros stripped. The zero polynomial has an
// empty coefficient vector and no degree (degree() is disengaged rather than
// a -1 sentinel).

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace dhtk {

class UniPoly {
public:
    UniPoly() = default;

    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

    static UniPoly constant(const Rational& a) { return UniPoly(std::vector<Rational>{a}); }

    static UniPoly monomial(int deg, const Rational& a) {
        if (deg < 0)
            throw std::invalid_argument("UniPoly: negative degree");
        std::vector<Rational> c(static_cast<size_t>(deg) + 1);
        c.back() = a;
        return UniPoly(std::move(c));
    }

    // t as a polynomial.
    static UniPoly identity() { return monomial(1, Rational(1)); }

    bool is_zero() const { return c_.empty(); }

    std::optional<int> degree() const {
        if (c_.empty())
            return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(int k) const {
        if (k < 0 || static_cast<size_t>(k) >= c_.size())
            return Rational(0);
        return c_[static_cast<size_t>(k)];
    }

    Rational operator()(const Rational& t) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * t + *it;
        return acc;
    }

    UniPoly operator-() const {
        std::vector<Rational> c(c_);
        for (auto& a : c) a = -a;
        return UniPoly(std::move(c));
    }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < c.size(); ++i)
            c[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
        return UniPoly(std::move(c));
    }

    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero())
            return UniPoly();
        std::vector<Rational> c(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                c[i + j] += c_[i] * o.c_[j];
        return UniPoly(std::move(c));
    }

    UniPoly operator*(const Rational& a) const {
        if (a.is_zero())
            return UniPoly();
        std::vector<Rational> c(c_);
        for (auto& x : c) x *= a;
        return UniPoly(std::move(c));
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly derivative() const {
        if (c_.size() <= 1)
            return UniPoly();
        std::vector<Rational> c(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i)
            c[i - 1] = c_[i] * Rational(static_cast<long long>(i));
        return UniPoly(std::move(c));
    }

    UniPoly nth_derivative(int n) const {
        UniPoly p = *this;
        for (int i = 0; i < n; ++i)
            p = p.derivative();
        return p;
    }

    UniPoly antiderivative() const {
        if (is_zero())
            return UniPoly();
        std::vector<Rational> c(c_.size() + 1);
        for (size_t i = 0; i < c_.size(); ++i)
            c[i + 1] = c_[i] / Rational(static_cast<long long>(i + 1));
        return UniPoly(std::move(c));
    }

    Rational integral(const Rational& lo, const Rational& hi) const {
        UniPoly f = antiderivative();
        return f(hi) - f(lo);
    }

    // p(a*t + b), exact composition with an affine map.
    UniPoly compose_affine(const Rational& a, const Rational& b) const {
        UniPoly result;
        UniPoly arg(std::vector<Rational>{b, a});
        UniPoly power = UniPoly::constant(Rational(1));
        for (size_t i = 0; i < c_.size(); ++i) {
            result = result + power * c_[i];
            if (i + 1 < c_.size())
                power = power * arg;
        }
        return result;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero())
                continue;
            if (!first)
                os << (c_[i].sign() > 0 ? " + " : " - ");
            else if (c_[i].sign() < 0)
                os << "-";
            Rational a = c_[i].abs();
            if (i == 0 || a != Rational(1))
                os << a.str();
            if (i >= 1) {
                if (a != Rational(1)) os << "*";
                os << var;
                if (i >= 2) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline UniPoly operator*(const Rational& a, const UniPoly& p) { return p * a; }

}  // namespace dhtk
