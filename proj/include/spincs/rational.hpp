#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "spincs/error.hpp"

namespace spincs {

// Exact rational arithmetic on 64-bit words. Every number in this library is
// a small pairing value, moment, or phase angle, so no big-integer backend is
// needed; the denominator is kept positive and the fraction reduced.
class Rational {
  public:
    Rational() = default;
    Rational(long long n) : num_(n) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0)
            fail("zero_denominator", "division by zero rational");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return num_ * o.den_ < o.num_ * den_;
    }
    bool operator>(const Rational& o) const { return o < *this; }

    std::string str() const {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    void normalize() {
        if (den_ == 0)
            fail("zero_denominator", "rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

// A unit-circle element exp(2*pi*i*angle) with an exact rational angle kept
// in [0, 1). Multiplication of phases is addition of angles; every value the
// library produces is a root of unity, never a float.
class Phase {
  public:
    Phase() = default;

    static Phase of(long long num, long long den) {
        return Phase(Rational(num, den));
    }
    static Phase from_angle(const Rational& a) { return Phase(a); }
    static Phase one() { return Phase(); }
    static Phase minus_one() { return Phase(Rational(1, 2)); }
    // (-1)^e as a phase.
    static Phase sign(long long e) {
        return (e % 2 != 0) ? minus_one() : one();
    }

    const Rational& angle() const { return angle_; }

    Phase operator*(const Phase& o) const { return Phase(angle_ + o.angle_); }
    Phase inverse() const { return Phase(-angle_); }
    Phase pow(long long k) const { return Phase(angle_ * Rational(k)); }

    bool operator==(const Phase& o) const { return angle_ == o.angle_; }
    bool operator!=(const Phase& o) const { return !(*this == o); }

    bool is_one() const { return angle_.is_zero(); }

    // Fixed rendering table for the 4th roots of unity; anything finer is
    // written as e(p/q) meaning exp(2*pi*i*p/q).
    std::string str() const {
        if (angle_.den() == 1)
            return "1";
        if (angle_.den() == 2)
            return "-1";
        if (angle_.den() == 4)
            return angle_.num() == 1 ? "i" : "-i";
        return "e(" + angle_.str() + ")";
    }

  private:
    explicit Phase(const Rational& a) : angle_(reduce_mod1(a)) {}

    static Rational reduce_mod1(const Rational& a) {
        long long n = a.num() % a.den();
        if (n < 0)
            n += a.den();
        return Rational(n, a.den());
    }

    Rational angle_; // in [0, 1)
};

} // namespace spincs
