#pragma once

// Exact rational scalars on top of boost::multiprecision. Every quantity in
// the library (momentum values, volumes, weights, polynomial coefficients)
// is one of these; there is no floating point on any verdict path.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dhtk {

using BigInt = boost::multiprecision::cpp_int;

// Invariants: lowest terms, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}

    Rational(BigInt num, BigInt den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        v_ = boost::multiprecision::cpp_rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(cpp_rat(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(cpp_rat(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(cpp_rat(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(cpp_rat(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.v_ == 0)
            throw std::domain_error("Rational: division by zero");
        return Rational(cpp_rat(v_ / o.v_));
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational abs() const { return v_ < 0 ? -*this : *this; }

    Rational reciprocal() const {
        if (v_ == 0)
            throw std::domain_error("Rational: reciprocal of zero");
        return Rational(denominator(), numerator());
    }

    double to_double() const { return v_.convert_to<double>(); }

    // Wire form: "p/q", or "p" when the denominator is 1.
    std::string str() const {
        std::string s = numerator().str();
        if (denominator() != 1)
            s += "/" + denominator().str();
        return s;
    }

    static Rational parse(const std::string& s) {
        if (s.empty())
            throw std::invalid_argument("Rational: empty string");
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(BigInt(s));
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            return Rational(num, den);
        } catch (const std::domain_error&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

private:
    using cpp_rat = boost::multiprecision::cpp_rational;
    explicit Rational(cpp_rat v) : v_(std::move(v)) {}
    cpp_rat v_;
};

inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace dhtk
