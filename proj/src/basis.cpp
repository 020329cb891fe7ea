#include "sqtile/basis.hpp"

#include <algorithm>
#include <cassert>

namespace sqtile {

std::string LinPoly::str() const {
    return z0.str() + (z1.sign() < 0 ? "-" : "+") + z1.abs().str() + "*x";
}

namespace {

bool all_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r.is_zero(); });
}

}  // namespace

RatBasis::RatBasis(const std::vector<RatVec>& values) {
    if (values.empty()) return;
    std::size_t dim = values.front().size();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].size() != dim)
            throw std::invalid_argument("RatBasis: inconsistent vector lengths");
        // Reduce against the echelon rows kept so far.
        RatVec residual = values[i];
        for (std::size_t r = 0; r < echelon_.size(); ++r) {
            const Rat& lead = residual[pivot_[r]];
            if (lead.is_zero()) continue;
            Rat factor = lead / echelon_[r][pivot_[r]];
            for (std::size_t c = 0; c < dim; ++c) residual[c] -= factor * echelon_[r][c];
        }
        if (all_zero(residual)) continue;  // dependent on the kept entries
        std::size_t p = 0;
        while (residual[p].is_zero()) ++p;
        basis_.push_back(values[i]);
        selected_.push_back(i);
        echelon_.push_back(std::move(residual));
        pivot_.push_back(p);
    }
}

RatVec RatBasis::coords(const RatVec& v) const {
    if (basis_.empty()) {
        if (!all_zero(v)) throw NotGoodError("coords: value outside the span of an empty basis");
        return {};
    }
    std::size_t k = basis_.size();
    std::size_t dim = basis_.front().size();
    if (v.size() != dim) throw std::invalid_argument("coords: dimension mismatch");

    // Solve B c = v where column j of B is the j-th kept vector. The
    // columns are independent by construction, so forward elimination
    // places a pivot in every column.
    std::vector<RatVec> rows(dim, RatVec(k + 1));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < k; ++j) rows[i][j] = basis_[j][i];
        rows[i][k] = v[i];
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t sel = row;
        while (sel < dim && rows[sel][col].is_zero()) ++sel;
        assert(sel < dim);
        std::swap(rows[row], rows[sel]);
        for (std::size_t r = row + 1; r < dim; ++r) {
            if (rows[r][col].is_zero()) continue;
            Rat factor = rows[r][col] / rows[row][col];
            for (std::size_t c = col; c <= k; ++c) rows[r][c] -= factor * rows[row][c];
        }
        ++row;
    }
    for (std::size_t r = row; r < dim; ++r)
        if (!rows[r][k].is_zero())
            throw NotGoodError("coords: value outside the span of the basis");

    RatVec c(k);
    for (std::size_t r = k; r-- > 0;) {
        Rat s = rows[r][k];
        for (std::size_t j = r + 1; j < k; ++j) s -= rows[r][j] * c[j];
        c[r] = s / rows[r][r];
    }
    return c;
}

std::vector<std::size_t> extract_basis(const std::vector<RatVec>& values) {
    return RatBasis(values).selected();
}

std::vector<QuadVal> build_pset(const CornerShape& corner, const std::vector<QuadVal>& piece_sides,
                                const QuadVal& lambda) {
    for (const QuadVal& r : piece_sides)
        if (r.sign() <= 0)
            throw std::invalid_argument("build_pset: piece side lengths must be positive");

    std::vector<QuadVal> rs = piece_sides;
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

    std::vector<QuadVal> p;
    p.push_back(corner.a);
    p.push_back(lambda * corner.a);
    p.push_back(corner.d);
    p.push_back(lambda * corner.d);
    p.push_back(corner.b);
    p.push_back(corner.c);
    for (const QuadVal& r : rs) {
        p.push_back(r);
        p.push_back(lambda * r);
    }
    return p;
}

FieldBasis::FieldBasis(QuadVal a, QuadVal lambda)
    : a_(std::move(a)), lambda_(std::move(lambda)), la_(lambda_ * a_) {
    if (a_.is_zero()) throw std::invalid_argument("FieldBasis: a must be nonzero");
    if (lambda_.is_rational())
        throw std::invalid_argument("FieldBasis: lambda must be irrational");
}

GoodCoords FieldBasis::coords(const QuadVal& v) const {
    // Solve p0*a + p1*(lambda a) = v componentwise over {1, sqrt(s)}. The
    // determinant is nonzero exactly because a != 0 and lambda is
    // irrational, so a and lambda*a are independent over Q.
    const QuadVal& ref = a_.is_rational() ? la_ : a_;
    const Rat& s = ref.radicand();
    auto [ax, ay] = a_.components(s);
    auto [lx, ly] = la_.components(s);
    Rat vx, vy;
    try {
        std::tie(vx, vy) = v.components(s);
    } catch (const std::domain_error&) {
        throw NotGoodError("coords: " + v.str() + " lies outside the working field");
    }
    Rat det = ax * ly - ay * lx;
    Rat p0 = (vx * ly - vy * lx) / det;
    Rat p1 = (ax * vy - ay * vx) / det;
    return {p0, p1};
}

LinPoly FieldBasis::hat(const QuadVal& v) const {
    GoodCoords c = coords(v);
    return {c[0], c[1]};
}

LinPoly hat(const GoodCoords& coords) {
    LinPoly out{Rat(), Rat()};
    if (!coords.empty()) out.z0 = coords[0];
    if (coords.size() > 1) out.z1 = coords[1];
    return out;
}

}  // namespace sqtile
