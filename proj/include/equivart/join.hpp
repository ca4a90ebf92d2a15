#pragma once

#include "equivart/arcs.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace equivart {

/// Point of the join of the circles of uniform polygons: a convex combination
/// t_1 * (1-gon circle) + t_3 * (3-gon circle) + ... Components with zero
/// coefficient are omitted; the base of component `index` parametrizes the
/// circle of uniform index-gons and is canonical mod 1/index turns.
struct JoinComponent {
    int index = 1;   // odd: 1, 3, 5, ...
    Rational t;      // > 0
    Angle base;      // in [0, 1/index)
    bool operator==(const JoinComponent& o) const { return index == o.index && t == o.t && base == o.base; }
};

struct JoinPoint {
    std::vector<JoinComponent> components;  // sorted by index, coefficients sum to 1

    static JoinPoint make(std::vector<JoinComponent> comps) {
        std::sort(comps.begin(), comps.end(),
                  [](const JoinComponent& a, const JoinComponent& b) { return a.index < b.index; });
        Rational total = 0;
        for (const auto& c : comps) {
            if (c.index < 1 || c.index % 2 == 0) throw std::invalid_argument("join indices must be odd");
            if (c.t <= 0) throw std::invalid_argument("join coefficients must be positive");
            if (c.base.turns >= Rational(1, c.index)) throw std::invalid_argument("join base not canonical");
            total += c.t;
        }
        for (size_t i = 1; i < comps.size(); ++i)
            if (comps[i].index == comps[i - 1].index) throw std::invalid_argument("duplicate join index");
        if (total != 1) throw std::invalid_argument("join coefficients must sum to 1");
        JoinPoint p;
        p.components = std::move(comps);
        return p;
    }

    bool operator==(const JoinPoint& o) const { return components == o.components; }
    bool operator!=(const JoinPoint& o) const { return !(*this == o); }
};

/// Join coordinates of a member measure: iterate average -> polygon split,
/// peeling off the uniform (2k+1)-gon component at each stratum and recursing
/// on the boundary remainder (strictly fewer arcs), scaling the deeper
/// coefficients by the leftover convex weight.
inline JoinPoint phi(const CircleMeasure& mu, const Rational& r_turns) {
    std::vector<JoinComponent> comps;
    Rational remaining = 1;
    CircleMeasure cur = mu;
    while (true) {
        RegularPolygonalMeasure rho = average(cur, r_turns);
        PolygonDecomposition dec = polygon_decompose(rho);
        if (dec.t > 0) comps.push_back({2 * rho.k + 1, remaining * dec.t, dec.base});
        if (!dec.boundary) break;  // t = 1, uniform polygon reached
        remaining *= (1 - dec.t);
        cur = dec.boundary->to_measure();
    }
    return JoinPoint::make(std::move(comps));
}

/// Pullback of the n-sheeted cover (n odd): each atom at angle theta, weight a,
/// spreads to the n preimages theta/n + t/n with weight a/n. If the input has
/// diameter <= pi - s, the image has diameter <= pi - s/n.
inline CircleMeasure g_n(const CircleMeasure& mu, int n) {
    if (n < 1 || n % 2 == 0) throw std::domain_error("cover degree must be odd and positive");
    std::vector<std::pair<Angle, Rational>> atoms;
    atoms.reserve(mu.atoms().size() * n);
    for (const auto& a : mu.atoms()) {
        Rational rep = a.angle.turns;  // representative in [0, 1)
        for (int t = 0; t < n; ++t)
            atoms.emplace_back(Angle::of_turns(rep / n + Rational(t, n)), a.weight / n);
    }
    return CircleMeasure::from_atoms(std::move(atoms));
}

/// Embedding of joins induced by g_n: component index -> index * n with the
/// same coefficient and base/n, all other coefficients zero.
inline JoinPoint h_embed(const JoinPoint& p, int n) {
    if (n < 1 || n % 2 == 0) throw std::domain_error("cover degree must be odd and positive");
    std::vector<JoinComponent> comps;
    comps.reserve(p.components.size());
    for (const auto& c : p.components)
        comps.push_back({c.index * n, c.t, Angle::of_turns(c.base.turns / n)});
    return JoinPoint::make(std::move(comps));
}

/// Circle action on join coordinates: weight `index` on the index-th circle,
/// realized on bases as base -> base + theta mod 1/index.
inline JoinPoint act(const Angle& theta, const JoinPoint& p) {
    std::vector<JoinComponent> comps;
    comps.reserve(p.components.size());
    for (const auto& c : p.components) {
        Rational period(1, c.index);
        Rational b = (c.base.turns + theta.turns);
        b -= rational_floor(b / period) * period;
        comps.push_back({c.index, c.t, Angle::of_turns(b)});
    }
    return JoinPoint::make(std::move(comps));
}

/// Fixed by the cyclic subgroup of order n iff every component with positive
/// coefficient has index divisible by n.
inline bool fixed_by(const JoinPoint& p, int n) {
    if (n < 1) throw std::domain_error("subgroup order must be positive");
    for (const auto& c : p.components)
        if (c.index % n != 0) return false;
    return true;
}

/// Scale on the n-fold cover: r = pi - s maps to pi - s/n.
inline Rational cover_scale(const Rational& r_turns, int n) {
    return Rational(1, 2) - (Rational(1, 2) - r_turns) / n;
}

/// Both routes around the cover square: phi of the pulled-back measure at the
/// pulled-back scale against the embedded phi of the original.
struct CommutingSquare {
    JoinPoint via_cover;  // phi(g_n(mu), pi - (pi-r)/n)
    JoinPoint via_embed;  // h(phi(mu, r), n)
    bool equal = false;
};

inline CommutingSquare commuting_square(const CircleMeasure& mu, const Rational& r_turns, int n) {
    CommutingSquare sq{phi(g_n(mu, n), cover_scale(r_turns, n)), h_embed(phi(mu, r_turns), n), false};
    sq.equal = (sq.via_cover == sq.via_embed);
    return sq;
}

/// Float diagnostic metric on join points: max over indices of
/// |t - t'| + min(t, t') * angular distance between bases on the index-th
/// circle. An artifact choice for sampled continuity reports only; the core
/// never compares join points approximately.
inline double join_distance(const JoinPoint& p, const JoinPoint& q) {
    double best = 0;
    auto coeff = [](const JoinPoint& jp, int index) -> const JoinComponent* {
        for (const auto& c : jp.components)
            if (c.index == index) return &c;
        return nullptr;
    };
    std::vector<int> indices;
    for (const auto& c : p.components) indices.push_back(c.index);
    for (const auto& c : q.components) indices.push_back(c.index);
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int idx : indices) {
        const JoinComponent* a = coeff(p, idx);
        const JoinComponent* b = coeff(q, idx);
        double ta = a ? to_double(a->t) : 0.0;
        double tb = b ? to_double(b->t) : 0.0;
        double d = std::abs(ta - tb);
        if (a && b) {
            Rational period(1, idx);
            Rational g = a->base.turns - b->base.turns;
            g -= rational_floor(g / period) * period;
            Rational ang = g <= period / 2 ? g : period - g;
            d += std::min(ta, tb) * to_double(ang) * kTwoPi;
        }
        best = std::max(best, d);
    }
    return best;
}

/// Sampled continuity report for phi along the convex path (1-u) mu + u nu.
/// Reports the largest jump between consecutive samples and how often the
/// stratum changes; a diagnostic, not an invariant.
struct ContinuityReport {
    double max_step = 0;
    int stratum_changes = 0;
    int samples = 0;
};

inline ContinuityReport phi_continuity_report(const CircleMeasure& mu, const CircleMeasure& nu,
                                              const Rational& r_turns, int steps) {
    if (steps < 1) throw std::invalid_argument("need at least one step");
    ContinuityReport rep;
    rep.samples = steps + 1;
    JoinPoint prev;
    int prev_stratum = -1;
    for (int i = 0; i <= steps; ++i) {
        Rational u(i, steps);
        std::vector<std::pair<Angle, Rational>> atoms;
        for (const auto& a : mu.atoms())
            if (u < 1) atoms.emplace_back(a.angle, a.weight * (1 - u));
        for (const auto& a : nu.atoms())
            if (u > 0) atoms.emplace_back(a.angle, a.weight * u);
        CircleMeasure mix = CircleMeasure::from_atoms(std::move(atoms));
        JoinPoint jp = phi(mix, r_turns);
        int st = stratum(mix, r_turns);
        if (i > 0) {
            rep.max_step = std::max(rep.max_step, join_distance(prev, jp));
            if (st != prev_stratum) ++rep.stratum_changes;
        }
        prev = jp;
        prev_stratum = st;
    }
    return rep;
}

}  // namespace equivart
