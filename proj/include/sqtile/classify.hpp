#pragma once

// Decision procedure for the aspect ratio lambda: rational values are
// trivially feasible, and an irrational lambda = x + y*sqrt(s) admits a
// witness lambda = p +- sqrt(q^2 - r^2) with rational p >= q >= r >= 0
// exactly when trace(lambda) > 0 and norm(lambda) > 0. The criterion is
// cross-validated against a denominator-bounded exhaustive search in the
// test suite. sweep_directions runs the whole corner/x-area machinery
// over a family of directions and checks the verdicts for consistency.

#include "sqtile/corner.hpp"
#include "sqtile/quad.hpp"
#include "sqtile/xarea.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqtile {

struct Certificate {
    enum class Kind { TraceNonpositive, NormNonpositive };

    Kind kind;
    Rat value;

    std::string str() const;
};

struct Classification {
    enum class Verdict { RationalTrivial, Feasible, Infeasible };

    Verdict verdict;
    std::optional<PqrWitness> witness;      // present for Feasible
    std::optional<Certificate> certificate; // present for Infeasible

    std::string str() const;
};

// The trace/norm criterion says a witness exists, but none was found
// within the denominator bound. Reported, never papered over.
struct WitnessNotFound : std::runtime_error {
    long max_denominator;
    explicit WitnessNotFound(long bound)
        : std::runtime_error("classify: the trace/norm criterion is feasible but no witness "
                             "has denominator <= " +
                             std::to_string(bound) + "; retry with a larger --max-denominator"),
          max_denominator(bound) {}
};

// Exact check of lambda = p +- sqrt(q^2 - r^2): requires p >= q >= r >= 0
// and (lambda - p)^2 = q^2 - r^2 in the field.
bool verify_witness(const QuadVal& lambda, const PqrWitness& w);

// Sign certificate for an irrational lambda > 0; nullopt means feasible.
std::optional<Certificate> infeasibility_certificate(const QuadVal& lambda);

// Full classification. Witnesses are searched over u = q - r with
// increasing denominator, then increasing numerator; the first witness
// that verifies wins. Throws WitnessNotFound when the bound is too small.
Classification classify_lambda(const QuadVal& lambda, long max_denominator);

struct DirectionRecord {
    Direction dir;  // normalized representative, q scaled to the slope key
    CornerData corner;
    AreaCase area_case;
    QuadPoly s;
    NonnegReport nonneg;
    std::optional<PqrWitness> witness;
    std::string witness_note;  // why no witness was extracted, when applicable
};

struct SweepReport {
    QuadVal lambda;
    std::optional<Certificate> certificate;  // infeasibility certificate, if any
    std::vector<DirectionRecord> records;    // keyed and ordered by direction slope
    std::vector<std::string> violations;     // consistency failures (must stay empty)
};

// Enumerates directions (c0 + c1*lambda, c2 + c3*lambda) with
// 0 <= c_i <= coeff_range, deduplicated up to positive scaling, and runs
// corner construction, x-area analysis and witness extraction on each.
// If lambda is infeasible, every direction must report a negative x-area
// somewhere; any other outcome lands in `violations`.
SweepReport sweep_directions(const QuadVal& lambda, int coeff_range);

}  // namespace sqtile
