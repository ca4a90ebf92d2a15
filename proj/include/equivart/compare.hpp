#pragma once

#include "equivart/persistence.hpp"
#include "equivart/rings.hpp"

#include <optional>
#include <vector>

namespace equivart {

/// Oracle Betti numbers against the continuum prediction for the band
/// containing r: a single odd sphere S^{2k+1} below pi, a point above.
/// Near-critical scales (within 1/n of a band boundary) are flagged since the
/// finite sample may sit on the wrong side of, or exactly at, the boundary.
struct TheoryComparison {
    int n = 0;
    Rational r_turns;
    int max_dim = 0;
    CoefField field = CoefField::F2;
    std::optional<int> band;            // absent for r >= pi
    std::vector<long> oracle_betti;     // dims 0 .. max_dim-1
    std::vector<long> predicted_betti;  // same range
    bool match = false;
    bool near_critical = false;
    std::optional<Rational> near_critical_ratio;
};

/// True when some critical ratio j/(2j+1) lies strictly within 1/n of r.
inline std::optional<Rational> nearest_critical_within(const Rational& r_turns, int n) {
    Rational lo = r_turns - Rational(1, n);
    Rational hi = r_turns + Rational(1, n);
    Rational half(1, 2);
    if (lo >= half) return std::nullopt;  // all critical ratios are below 1/2
    Rational a = lo <= 0 ? Rational(0) : lo / (1 - 2 * lo);
    Integer j0 = rational_floor(a) + 1;
    if (j0 < 1) j0 = 1;
    if (hi >= half)  // the ratios accumulate at 1/2, so some j always lands inside
        return Rational(j0, 2 * j0 + 1);
    Rational b = hi / (1 - 2 * hi);
    if (Rational(j0) < b) return Rational(j0, 2 * j0 + 1);
    return std::nullopt;
}

inline TheoryComparison compare_with_theory(int n, const Rational& r_turns, int max_dim,
                                            CoefField field, long budget = kDefaultSimplexBudget) {
    TheoryComparison rep;
    rep.n = n;
    rep.r_turns = r_turns;
    rep.max_dim = max_dim;
    rep.field = field;
    rep.band = band_index(r_turns);
    rep.oracle_betti = betti(n, r_turns, max_dim, field, budget);

    rep.predicted_betti.assign(static_cast<size_t>(max_dim), 0);
    rep.predicted_betti[0] = 1;
    if (rep.band) {
        int top = 2 * *rep.band + 1;
        if (top < max_dim) rep.predicted_betti[static_cast<size_t>(top)] = 1;
    }
    rep.match = (rep.oracle_betti == rep.predicted_betti);

    rep.near_critical_ratio = nearest_critical_within(r_turns, n);
    rep.near_critical = rep.near_critical_ratio.has_value();
    return rep;
}

}  // namespace equivart
