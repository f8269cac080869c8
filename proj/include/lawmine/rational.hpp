#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lawmine {

// Exact rational over 64-bit integers. Denominator is always positive and
// the fraction is kept in lowest terms, so equality is plain member equality.
// Comparisons and arithmetic go through __int128 to avoid silent overflow.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return double(num_) / double(den_); }

    // Canonical text form: integers print bare, finite decimals print as
    // decimals (shortest digit string), everything else as "num/den".
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        std::int64_t d = den_;
        int twos = 0, fives = 0;
        while (d % 2 == 0) { d /= 2; ++twos; }
        while (d % 5 == 0) { d /= 5; ++fives; }
        if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
        int digits = twos > fives ? twos : fives;
        i128 scaled = i128(num_);
        for (int i = 0; i < digits; ++i) scaled *= 10;
        scaled /= den_;
        bool neg = scaled < 0;
        if (neg) scaled = -scaled;
        std::string frac = to_dec(scaled);
        while ((int)frac.size() <= digits) frac.insert(frac.begin(), '0');
        frac.insert(frac.end() - digits, '.');
        return (neg ? "-" : "") + frac;
    }

    // Accepts "123", "-4.5", "7/2". Returns false on malformed input.
    static bool parse(const std::string& s, Rational& out) {
        if (s.empty()) return false;
        std::size_t slash = s.find('/');
        if (slash != std::string::npos) {
            Rational n, d;
            if (!parse_decimal(s.substr(0, slash), n)) return false;
            if (!parse_decimal(s.substr(slash + 1), d)) return false;
            if (d.num_ == 0) return false;
            out = n / d;
            return true;
        }
        return parse_decimal(s, out);
    }

private:
    using i128 = __int128;

    std::int64_t num_, den_;

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    static Rational from128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 a = n < 0 ? -n : n, b = d;
        while (b) { i128 t = a % b; a = b; b = t; }
        if (a > 1) { n /= a; d /= a; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = (std::int64_t)n;
        r.den_ = (std::int64_t)d;
        return r;
    }

    static std::string to_dec(i128 v) {
        if (v == 0) return "0";
        std::string s;
        while (v) { s.insert(s.begin(), char('0' + int(v % 10))); v /= 10; }
        return s;
    }

    static bool parse_decimal(const std::string& s, Rational& out) {
        std::size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
        i128 num = 0, den = 1;
        bool digit = false, dot = false;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c == '.') {
                if (dot) return false;
                dot = true;
            } else if (c >= '0' && c <= '9') {
                digit = true;
                num = num * 10 + (c - '0');
                if (dot) den *= 10;
                if (num > i128(INT64_MAX) || den > i128(INT64_MAX)) return false;
            } else {
                return false;
            }
        }
        if (!digit) return false;
        out = from128(neg ? -num : num, den);
        return true;
    }
};

}  // namespace lawmine
