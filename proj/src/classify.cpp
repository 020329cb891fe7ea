#include "sqtile/classify.hpp"

#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace sqtile {

std::string Certificate::str() const {
    switch (kind) {
        case Kind::TraceNonpositive:
            return "trace(lambda) = " + value.str() + " <= 0";
        case Kind::NormNonpositive:
            return "norm(lambda) = " + value.str() + " <= 0";
    }
    return "?";
}

std::string Classification::str() const {
    switch (verdict) {
        case Verdict::RationalTrivial:
            return "rational lambda: trivially feasible";
        case Verdict::Feasible:
            return "feasible: lambda = p +- sqrt(q^2 - r^2) with (p, q, r) = " + witness->str();
        case Verdict::Infeasible:
            return "infeasible: " + certificate->str();
    }
    return "?";
}

bool verify_witness(const QuadVal& lambda, const PqrWitness& w) {
    if (w.r.sign() < 0 || w.q < w.r || w.p < w.q) return false;
    QuadVal diff = lambda - QuadVal(w.p);
    QuadVal sq = diff * diff;
    if (!sq.is_rational()) return false;
    return sq.as_rat() == w.q * w.q - w.r * w.r;
}

std::optional<Certificate> infeasibility_certificate(const QuadVal& lambda) {
    if (lambda.is_rational())
        throw std::invalid_argument("infeasibility_certificate: lambda is rational");
    Rat trace = lambda.trace();
    if (trace.sign() <= 0) return Certificate{Certificate::Kind::TraceNonpositive, trace};
    Rat norm = lambda.norm();
    if (norm.sign() <= 0) return Certificate{Certificate::Kind::NormNonpositive, norm};
    return std::nullopt;
}

Classification classify_lambda(const QuadVal& lambda, long max_denominator) {
    if (lambda.sign() <= 0) throw std::invalid_argument("classify: lambda must be positive");
    if (max_denominator < 1)
        throw std::invalid_argument("classify: max_denominator must be >= 1");
    if (lambda.is_rational())
        return {Classification::Verdict::RationalTrivial, std::nullopt, std::nullopt};

    if (auto cert = infeasibility_certificate(lambda))
        return {Classification::Verdict::Infeasible, std::nullopt, cert};

    // Matching lambda = x + y*sqrt(s) against p +- sqrt(q^2 - r^2) forces
    // p = x and q^2 - r^2 = y^2 s =: K. Writing u = q - r gives
    // q = (u + K/u)/2 and r = (K/u - u)/2, so any rational 0 < u < sqrt(K)
    // with q <= p yields a witness. Note u = sqrt(K) is impossible: K is
    // irrational-rooted because s is not a square.
    Rat p = lambda.rat_part();
    Rat K = lambda.coeff() * lambda.coeff() * lambda.radicand();
    for (long den = 1; den <= max_denominator; ++den) {
        for (long num = 1;; ++num) {
            Rat u(num, den);
            if (u.num() != num) continue;  // not in lowest terms; seen earlier
            Rat r2 = K - u * u;
            if (r2.sign() < 0) break;  // u > sqrt(K): r would be negative
            Rat q = (u + K / u) / Rat(2);
            if (q > p) continue;  // q decreases as u grows; keep going
            PqrWitness w{p, q, (K / u - u) / Rat(2)};
            if (verify_witness(lambda, w))
                return {Classification::Verdict::Feasible, w, std::nullopt};
        }
    }
    throw WitnessNotFound(max_denominator);
}

namespace {

// Parallel map over [0, n) with a deterministic output slot per index.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    unsigned workers = std::min<std::size_t>(std::thread::hardware_concurrency(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

SweepReport sweep_directions(const QuadVal& lambda, int coeff_range) {
    if (lambda.sign() <= 0 || lambda.is_rational())
        throw std::invalid_argument("sweep: lambda must be positive and irrational");
    if (coeff_range < 0) throw std::invalid_argument("sweep: coeff_range must be >= 0");

    SweepReport report;
    report.lambda = lambda;
    report.certificate = infeasibility_certificate(lambda);

    // Enumerate and deduplicate up to positive scaling: the slope p/q is a
    // complete invariant of the ray, and corner coefficients only depend
    // on the ray.
    std::map<std::string, Direction> rays;
    for (int c0 = 0; c0 <= coeff_range; ++c0)
        for (int c1 = 0; c1 <= coeff_range; ++c1)
            for (int c2 = 0; c2 <= coeff_range; ++c2)
                for (int c3 = 0; c3 <= coeff_range; ++c3) {
                    if (c0 == 0 && c1 == 0 && c2 == 0 && c3 == 0) continue;
                    QuadVal ux = QuadVal(Rat(c0)) + QuadVal(Rat(c1)) * lambda;
                    QuadVal uy = QuadVal(Rat(c2)) + QuadVal(Rat(c3)) * lambda;
                    Direction dir = normalize_direction(ux, uy);
                    std::string key = (dir.p / dir.q).str();
                    rays.emplace(key, dir);
                }

    std::vector<Direction> dirs;
    dirs.reserve(rays.size());
    for (auto& [key, dir] : rays) dirs.push_back(dir);

    report.records.resize(dirs.size());
    parallel_for(dirs.size(), [&](std::size_t i) {
        DirectionRecord rec;
        rec.dir = dirs[i];
        rec.corner = build_corner(lambda, rec.dir, LatticeMode::G);
        rec.s = corner_xarea(rec.corner);
        rec.area_case = classify_area_case(rec.corner, lambda);
        rec.nonneg = analyze_nonnegativity(rec.s);
        if (rec.area_case.kind == AreaCase::Kind::QuadraticRelation) {
            try {
                rec.witness =
                    extract_pqr(rec.corner.d0, rec.corner.d1, rec.corner.e0, rec.corner.e1, lambda);
            } catch (const PreconditionFailed& e) {
                rec.witness_note = e.which;
            }
        } else {
            rec.witness_note = "linear x-area";
        }
        report.records[i] = std::move(rec);
    });

    for (const DirectionRecord& rec : report.records) {
        if (report.certificate && rec.nonneg.nonnegative)
            report.violations.push_back(
                "direction (" + rec.dir.str() + "): x-area " + rec.s.str() +
                " is nonnegative for every x although lambda is infeasible (" +
                report.certificate->str() + ")");
        if (rec.nonneg.nonnegative &&
            rec.area_case.kind == AreaCase::Kind::QuadraticRelation && !rec.witness)
            report.violations.push_back("direction (" + rec.dir.str() +
                                        "): nonnegative x-area with a quadratic relation but no "
                                        "witness was extracted (" +
                                        rec.witness_note + ")");
    }
    return report;
}

}  // namespace sqtile
