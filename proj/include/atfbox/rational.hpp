#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace atfbox {

// Exact rational with canonical form gcd(num,den)=1, den >= 1.
// Comparisons cross-multiply in 128 bits, so endpoint arithmetic never
// touches floating point.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// Closed interval [lo, hi] with exact endpoints; degenerate points allowed.
struct IntervalQ {
    Rational lo, hi;

    IntervalQ() = default;
    IntervalQ(Rational l, Rational h) : lo(l), hi(h) {
        if (h < l) throw std::invalid_argument("interval with hi < lo");
    }

    friend bool operator==(const IntervalQ&, const IntervalQ&) = default;

    static bool intersects(const IntervalQ& a, const IntervalQ& b) {
        const Rational& lo = a.lo < b.lo ? b.lo : a.lo;
        const Rational& hi = a.hi < b.hi ? a.hi : b.hi;
        return lo <= hi;
    }

    std::string str() const { return "[" + lo.str() + "," + hi.str() + "]"; }
};

} // namespace atfbox
