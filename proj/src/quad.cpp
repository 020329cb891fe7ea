#include "sqtile/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace sqtile {

QuadVal::QuadVal(Rat x, Rat y, Rat s) : x_(std::move(x)), y_(std::move(y)), s_(std::move(s)) {
    if (s_.sign() < 0) throw std::domain_error("QuadVal: negative radicand");
    normalize();
}

void QuadVal::normalize() {
    if (s_.is_zero()) {
        y_ = Rat();
        return;
    }
    if (y_.is_zero()) {
        s_ = Rat();
        return;
    }
    if (s_.is_square()) {
        x_ += y_ * s_.sqrt();
        y_ = Rat();
        s_ = Rat();
    }
}

const Rat& QuadVal::as_rat() const {
    if (!is_rational()) throw std::domain_error("QuadVal: not rational: " + str());
    return x_;
}

QuadVal QuadVal::aligned(const QuadVal& o) const {
    if (o.y_.is_zero() || o.s_ == s_) return o;
    // sqrt(o.s) = t * sqrt(s) iff o.s/s is a rational square.
    Rat ratio = o.s_ / s_;
    if (!ratio.is_square())
        throw std::domain_error("QuadVal: radicand mismatch: sqrt(" + s_.str() +
                                ") vs sqrt(" + o.s_.str() + ")");
    QuadVal r;
    r.x_ = o.x_;
    r.y_ = o.y_ * ratio.sqrt();
    r.s_ = s_;
    return r;
}

QuadVal QuadVal::operator-() const {
    QuadVal r = *this;
    r.x_ = -r.x_;
    r.y_ = -r.y_;
    return r;
}

QuadVal& QuadVal::operator+=(const QuadVal& o) {
    if (y_.is_zero()) {
        Rat x = x_ + o.x_;
        x_ = x;
        y_ = o.y_;
        s_ = o.s_;
        return *this;
    }
    QuadVal b = aligned(o);
    x_ += b.x_;
    y_ += b.y_;
    normalize();
    return *this;
}

QuadVal& QuadVal::operator*=(const QuadVal& o) {
    if (y_.is_zero()) {
        Rat c = x_;
        x_ = c * o.x_;
        y_ = c * o.y_;
        s_ = o.s_;
        normalize();
        return *this;
    }
    QuadVal b = aligned(o);
    // (x1 + y1 w)(x2 + y2 w) = (x1 x2 + y1 y2 s) + (x1 y2 + x2 y1) w
    Rat nx = x_ * b.x_ + y_ * b.y_ * s_;
    Rat ny = x_ * b.y_ + b.x_ * y_;
    x_ = nx;
    y_ = ny;
    normalize();
    return *this;
}

QuadVal& QuadVal::operator/=(const QuadVal& o) {
    if (o.is_zero()) throw std::domain_error("QuadVal: division by zero");
    if (o.is_rational()) {
        x_ /= o.x_;
        y_ /= o.x_;
        return *this;
    }
    // 1/(x + y w) = (x - y w) / (x^2 - y^2 s); the norm is nonzero because
    // s is not a rational square.
    Rat n = o.norm();
    QuadVal inv = o.conj();
    inv.x_ /= n;
    inv.y_ /= n;
    return *this *= inv;
}

int QuadVal::sign() const {
    int sx = x_.sign();
    int sy = y_.sign();
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Mixed signs: |x| vs |y| sqrt(s) decided by x^2 vs y^2 s. Equality is
    // impossible here since s is not a rational square.
    int c = (x_ * x_ <=> y_ * y_ * s_) == std::strong_ordering::less ? -1 : 1;
    return sx > 0 ? c : -c;
}

QuadVal QuadVal::conj() const {
    QuadVal r = *this;
    r.y_ = -r.y_;
    return r;
}

Rat QuadVal::norm() const {
    return x_ * x_ - y_ * y_ * s_;
}

mpz_class QuadVal::floor() const {
    if (is_rational()) return x_.floor();
    // v = x + y sqrt(s) with s = sn/sd: sqrt(s) = sqrt(sn*sd)/sd, so
    // v = (A + P sqrt(N)) / C over the common denominator
    //   N = sn*sd, A = num(x)*den(y)*sd, P = num(y)*den(x), C = den(x)*den(y)*sd,
    // where N > 0 is not a perfect square. Integer square roots bracket
    // P*sqrt(N) between consecutive integers, which pins the floor exactly.
    mpz_class sn = s_.num(), sd = s_.den();
    mpz_class N = sn * sd;
    mpz_class A = x_.num() * y_.den() * sd;
    mpz_class P = y_.num() * x_.den();
    mpz_class C = x_.den() * y_.den() * sd;
    mpz_class root;
    mpz_class p2n = P * P * N;
    mpz_sqrt(root.get_mpz_t(), p2n.get_mpz_t());
    mpz_class top;
    if (P > 0) {
        // P sqrt(N) lies in (root, root+1)
        top = A + root;
    } else {
        // P sqrt(N) lies in (-root-1, -root)
        top = A - root - 1;
    }
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), top.get_mpz_t(), C.get_mpz_t());
    return q;
}

bool operator==(const QuadVal& a, const QuadVal& b) {
    if (a.y_.is_zero() || b.y_.is_zero())
        return a.x_ == b.x_ && a.y_ == b.y_;
    if (a.s_ == b.s_) return a.x_ == b.x_ && a.y_ == b.y_;
    Rat ratio = b.s_ / a.s_;
    if (!ratio.is_square()) return false;
    return a.x_ == b.x_ && a.y_ == b.y_ * ratio.sqrt();
}

std::pair<Rat, Rat> QuadVal::components(const Rat& s) const {
    if (y_.is_zero()) return {x_, Rat()};
    if (s == s_) return {x_, y_};
    if (s.sign() > 0) {
        Rat ratio = s_ / s;
        if (ratio.is_square()) return {x_, y_ * ratio.sqrt()};
    }
    throw std::domain_error("QuadVal: " + str() + " is not in Q(sqrt(" + s.str() + "))");
}

std::string QuadVal::str() const {
    if (is_rational()) return x_.str();
    if (y_.sign() > 0) return x_.str() + "+" + y_.str() + "*w";
    return x_.str() + "-" + (-y_).str() + "*w";
}

double QuadVal::to_double() const {
    double v = x_.to_double();
    if (!y_.is_zero()) v += y_.to_double() * std::sqrt(s_.to_double());
    return v;
}

}  // namespace sqtile
