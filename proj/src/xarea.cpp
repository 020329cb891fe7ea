#include "sqtile/xarea.hpp"

#include "sqtile/classify.hpp"

namespace sqtile {

std::string QuadPoly::str() const {
    std::string out;
    auto term = [&](const Rat& c, const char* power) {
        if (c.is_zero()) return;
        if (out.empty()) {
            out += c.str();
        } else {
            out += c.sign() < 0 ? "-" : "+";
            out += c.abs().str();
        }
        out += power;
    };
    term(c2, "*x^2");
    term(c1, "*x");
    term(c0, "");
    return out.empty() ? "0" : out;
}

QuadPoly xarea_rect(const LinPoly& side1, const LinPoly& side2) {
    return {side1.z0 * side2.z0, side1.z0 * side2.z1 + side1.z1 * side2.z0,
            side1.z1 * side2.z1};
}

QuadPoly xarea_rect(const GoodCoords& side1, const GoodCoords& side2) {
    return xarea_rect(hat(side1), hat(side2));
}

QuadPoly xarea_sum(const Dissection& d, const FieldBasis& basis) {
    QuadPoly total{};
    for (const Rect& p : d.pieces)
        total += xarea_rect(basis.hat(p.w), basis.hat(p.h));
    return total;
}

QuadPoly corner_xarea(const CornerData& cd) {
    // x - (d0 + d1 x)(e0 + e1 x)
    return {-cd.d0 * cd.e0, Rat(1) - cd.d0 * cd.e1 - cd.d1 * cd.e0, -cd.d1 * cd.e1};
}

std::string NonnegReport::str() const {
    if (nonnegative) return "nonnegative for all x";
    return "negative at x = " + witness.str();
}

NonnegReport analyze_nonnegativity(const QuadPoly& s) {
    if (s.c2.is_zero()) {
        if (s.c1.is_zero())
            return s.c0.sign() >= 0 ? NonnegReport{} : NonnegReport{false, Rat(0)};
        // Non-constant linear: negative on one side. Step far enough past
        // the root that the value is at most -|c1|.
        Rat x = -(s.c0.abs() + s.c1.abs()) / s.c1;
        return {false, x};
    }
    Rat vertex = -s.c1 / (Rat(2) * s.c2);
    if (s.c2.sign() > 0) {
        Rat disc = s.c1 * s.c1 - Rat(4) * s.c0 * s.c2;
        if (disc.sign() <= 0) return {};
        return {false, vertex};  // minimum value -disc/(4 c2) < 0
    }
    // Downward parabola: walk right from the vertex until the value drops
    // below zero; doubling reaches it after finitely many exact steps.
    Rat step(1);
    while (s.eval(vertex + step).sign() >= 0) step *= Rat(2);
    return {false, vertex + step};
}

std::string AreaCase::str() const {
    if (kind == Kind::Linear) return "linear, slope " + slope.str();
    return "quadratic relation " + ra.str() + "*L^2 + (" + rb.str() + ")*L + " + rc.str() +
           " = 0";
}

AreaCase classify_area_case(const CornerData& cd, const QuadVal& lambda) {
    if ((cd.d1 * cd.e1).is_zero()) {
        Rat slope = Rat(1) - cd.d0 * cd.e1 - cd.d1 * cd.e0;
        return {AreaCase::Kind::Linear, slope, Rat(), Rat(), Rat()};
    }
    Rat b = cd.e1 + cd.d0;
    QuadVal check = QuadVal(cd.d1) * lambda * lambda + QuadVal(b) * lambda + QuadVal(cd.e0);
    if (!check.is_zero())
        throw RelationViolated("lambda relation violated: " + check.str() + " != 0");
    return {AreaCase::Kind::QuadraticRelation, Rat(), cd.d1, b, cd.e0};
}

Rat area_discriminant(const Rat& d0, const Rat& d1, const Rat& p, const Rat& q) {
    if (d1.is_zero()) throw std::domain_error("area_discriminant: d1 must be nonzero");
    Rat two(2), four(4);
    Rat expanded = (two * d1 * d0 * p + d0 * d0 + d1 * d1 * q + Rat(1));
    expanded = expanded * expanded - four * (two * d1 * d1 * p + d1 * d0) * d1 * d0 * q;
    Rat factored = (two * d1 * d0 * p + d0 * d0 - d1 * d1 * q + Rat(1));
    factored = factored * factored + four * d1 * d1 * q;
    if (expanded != factored)
        throw std::logic_error("area_discriminant: the two discriminant forms disagree");
    return factored;
}

PqrWitness extract_pqr(const Rat& d0, const Rat& d1, const Rat& e0, const Rat& e1,
                       const QuadVal& lambda) {
    if (d1.is_zero()) throw PreconditionFailed("d1 != 0", "d1 = 0");
    Rat b = e1 + d0;
    if (b.is_zero()) throw PreconditionFailed("e1 + d0 != 0", "e1 + d0 = 0");
    if (lambda.sign() <= 0)
        throw PreconditionFailed("lambda > 0", "lambda = " + lambda.str());
    QuadVal rel = QuadVal(d1) * lambda * lambda + QuadVal(b) * lambda + QuadVal(e0);
    if (!rel.is_zero())
        throw PreconditionFailed("lambda root",
                                 "d1*L^2 + (e1+d0)*L + e0 = " + rel.str() + ", not 0");
    Rat gate = e0 * d1 - e1 * d0 + Rat(1);
    gate = gate * gate - Rat(4) * d1 * e0;
    if (gate.sign() > 0)
        throw PreconditionFailed("(e0 d1 - e1 d0 + 1)^2 - 4 d1 e0 <= 0",
                                 "value = " + gate.str());

    Rat e1p = e0 * d1 / b;
    Rat d0p = b - e1p;
    Rat two_d1 = Rat(2) * d1;
    PqrWitness w;
    w.p = -(e1p + d0p) / two_d1;
    w.q = ((e1p - d0p) / two_d1).abs();
    w.r = (e1p / d1).abs();

    if (!verify_witness(lambda, w))
        throw std::logic_error("extract_pqr: constructed witness " + w.str() +
                               " failed verification for lambda = " + lambda.str());
    return w;
}

}  // namespace sqtile
