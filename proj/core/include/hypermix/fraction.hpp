#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hypermix {

/// Exact rational with 64-bit numerator/denominator, normalized (den > 0,
/// gcd = 1). Intermediates run through __int128; anything that does not fit
/// back into 64 bits throws std::overflow_error.
class Fraction {
public:
    Fraction() = default;
    Fraction(long long value) : num_(value), den_(1) {} // NOLINT: implicit by design
    Fraction(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    Fraction operator-() const { return Fraction(-num_, den_); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.num_ == 0) throw std::domain_error("Fraction: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    Fraction& operator/=(const Fraction& o) { return *this = *this / o; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    friend bool operator<(const Fraction& a, const Fraction& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return !(b < a); }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }

    /// base^exp for exp >= 0.
    static Fraction pow(Fraction base, int exp) {
        if (exp < 0) throw std::invalid_argument("Fraction::pow: negative exponent");
        Fraction out(1);
        for (int i = 0; i < exp; ++i) out *= base;
        return out;
    }

private:
    using i128 = __int128;

    long long num_ = 0;
    long long den_ = 1;

    static long long narrow(i128 v) {
        if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
            throw std::overflow_error("Fraction: value exceeds 64-bit range");
        return static_cast<long long>(v);
    }

    static Fraction make(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("Fraction: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i128 a = num < 0 ? -num : num;
        i128 b = den;
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        if (a != 0) { num /= a; den /= a; }
        Fraction f;
        f.num_ = narrow(num);
        f.den_ = narrow(den);
        return f;
    }

    void normalize() { *this = make(num_, den_); }
};

} // namespace hypermix
