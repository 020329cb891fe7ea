#pragma once

// The real quadratic field Q(sqrt(s)): values x + y*sqrt(s) with exact
// rational components and a certified algebraic sign.
//
// Canonical form: y == 0 implies s == 0 (purely rational value); a value
// with y != 0 has s > 0 and s not a square of a rational (square radicands
// are folded into the rational part at construction). Two values live in
// the same field when their radicands agree up to a rational square factor;
// binary operations rescale automatically in that case and throw on a
// genuine field mismatch.

#include "sqtile/rational.hpp"

#include <string>

namespace sqtile {

class QuadVal {
public:
    QuadVal() = default;
    QuadVal(Rat x) : x_(std::move(x)) {}
    QuadVal(long n) : x_(n) {}
    QuadVal(Rat x, Rat y, Rat s);

    const Rat& rat_part() const { return x_; }
    const Rat& coeff() const { return y_; }
    const Rat& radicand() const { return s_; }

    bool is_rational() const { return y_.is_zero(); }
    // Pre: is_rational().
    const Rat& as_rat() const;

    QuadVal operator-() const;
    QuadVal& operator+=(const QuadVal& o);
    QuadVal& operator-=(const QuadVal& o) { return *this += -o; }
    QuadVal& operator*=(const QuadVal& o);
    QuadVal& operator/=(const QuadVal& o);

    friend QuadVal operator+(QuadVal a, const QuadVal& b) { return a += b; }
    friend QuadVal operator-(QuadVal a, const QuadVal& b) { return a -= b; }
    friend QuadVal operator*(QuadVal a, const QuadVal& b) { return a *= b; }
    friend QuadVal operator/(QuadVal a, const QuadVal& b) { return a /= b; }

    // Exact sign by case analysis on the signs of x, y and a comparison
    // of x^2 against y^2 s. Never consults floating point.
    int sign() const;
    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }

    QuadVal conj() const;                 // x - y*sqrt(s)
    Rat trace() const { return x_ + x_; } // value + conjugate
    Rat norm() const;                     // value * conjugate = x^2 - y^2 s

    // Largest integer <= value, certified through integer square roots.
    mpz_class floor() const;

    friend bool operator==(const QuadVal& a, const QuadVal& b);
    friend bool operator!=(const QuadVal& a, const QuadVal& b) { return !(a == b); }
    friend bool operator<(const QuadVal& a, const QuadVal& b) { return (a - b).sign() < 0; }
    friend bool operator>(const QuadVal& a, const QuadVal& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const QuadVal& a, const QuadVal& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const QuadVal& a, const QuadVal& b) { return (a - b).sign() >= 0; }

    // Components (x, y) of this value over {1, sqrt(s)} for the given
    // radicand; throws std::domain_error when the value lies outside
    // Q(sqrt(s)).
    std::pair<Rat, Rat> components(const Rat& s) const;

    // "x" for rational values, else "x+y*w" / "x-y*w" where w = sqrt(s).
    std::string str() const;
    double to_double() const;

private:
    void normalize();
    // Rewrites o into this value's field; throws std::domain_error when the
    // radicands differ by more than a rational square factor.
    QuadVal aligned(const QuadVal& o) const;

    Rat x_;
    Rat y_;
    Rat s_;
};

struct ConjTraceNorm {
    QuadVal conj;
    Rat trace;
    Rat norm;
};

inline ConjTraceNorm conj_trace_norm(const QuadVal& v) {
    return {v.conj(), v.trace(), v.norm()};
}

inline int quad_sign(const QuadVal& v) { return v.sign(); }
inline mpz_class field_floor(const QuadVal& v) { return v.floor(); }

}  // namespace sqtile
