#pragma once

// Exact arbitrary-precision rationals, backed by GMP.
//
// Rat is always canonical: denominator > 0 and gcd(num, den) = 1.
// All geometry and invariant computations in this project run on Rat
// (or on QuadVal, which is a pair of Rats); no floating point is ever
// used for a decision.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace sqtile {

class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(long n, long d);
    Rat(mpz_class n, mpz_class d);
    explicit Rat(mpq_class v);

    // Grammar: "n" or "n/d" with d > 0. Throws std::invalid_argument
    // with the offending position on malformed input.
    static Rat parse(std::string_view text);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    // True iff this is the square of a rational.
    bool is_square() const;
    // Exact square root; pre: is_square().
    Rat sqrt() const;

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    // Largest integer <= value.
    mpz_class floor() const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    // "n" or "n/d"; round-trips through parse().
    std::string str() const;
    double to_double() const { return q_.get_d(); }

private:
    mpq_class q_;  // canonical: GMP keeps den > 0, gcd(num, den) = 1
};

inline Rat rat_of(const mpz_class& z) { return Rat(z, 1); }

}  // namespace sqtile
