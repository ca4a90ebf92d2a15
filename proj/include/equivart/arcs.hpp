#pragma once

#include "equivart/circle_measure.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace equivart {

/// Closed circular interval from `start` counterclockwise to `end`.
/// start == end denotes a singleton. Open intervals reuse the same struct;
/// openness is a property of the containing API, not of the struct.
struct CircularInterval {
    Angle start;
    Angle end;

    bool contains_closed(const Angle& p) const {
        if (start.turns <= end.turns) return start.turns <= p.turns && p.turns <= end.turns;
        return p.turns >= start.turns || p.turns <= end.turns;  // wraps through 0
    }

    bool operator==(const CircularInterval& o) const { return start == o.start && end == o.end; }
};

namespace detail {

inline void require_arc_scale(const Rational& r_turns) {
    if (r_turns < 0) throw std::domain_error("negative scale");
    if (r_turns >= Rational(1, 2))
        throw std::domain_error("arc machinery requires r < pi; scales r >= pi have no excluded region");
}

}  // namespace detail

/// Excluded region E(mu) at scale r: for each support point, the open arc of
/// length 2*pi - 2r centered at its antipode; returned as disjoint maximal open
/// intervals sorted by start angle. Requires 0 <= r < pi. Support points are
/// never excluded, so the union never covers the circle.
inline std::vector<CircularInterval> excluded_region(const CircleMeasure& mu, const Rational& r_turns) {
    detail::require_arc_scale(r_turns);
    const Rational len = 1 - 2 * r_turns;  // > 0
    const Rational anchor = mu.atoms().front().angle.turns;  // never inside E

    // Shift so the anchor sits at 0; every excluded interval then lies in (0, 1].
    std::vector<std::pair<Rational, Rational>> segs;  // (start, end), open
    segs.reserve(mu.atoms().size());
    for (const auto& a : mu.atoms()) {
        Rational s = circular_gap(Angle::of_turns(anchor), a.angle + r_turns);
        segs.emplace_back(s, s + len);
    }
    std::sort(segs.begin(), segs.end());

    // Merge strictly overlapping open intervals; touching endpoints stay split,
    // which is what keeps singleton arcs alive at the critical scales.
    std::vector<std::pair<Rational, Rational>> merged;
    for (const auto& seg : segs) {
        if (!merged.empty() && seg.first < merged.back().second) {
            if (seg.second > merged.back().second) merged.back().second = seg.second;
        } else {
            merged.push_back(seg);
        }
    }

    std::vector<CircularInterval> out;
    out.reserve(merged.size());
    for (const auto& [s, e] : merged)
        out.push_back({Angle::of_turns(s + anchor), Angle::of_turns(e + anchor)});
    std::sort(out.begin(), out.end(),
              [](const CircularInterval& a, const CircularInterval& b) { return a.start.turns < b.start.turns; });
    return out;
}

/// The mu-arcs at scale r: connected components of the complement of E(mu)
/// that contain support, listed counterclockwise with per-arc masses. The
/// count 2k+1 is always odd for member measures; k is the stratum index.
struct ArcDecomposition {
    std::vector<CircularInterval> arcs;  // closed, pairwise disjoint, ccw order
    std::vector<Rational> masses;
    int stratum_k = 0;
};

inline ArcDecomposition arcs(const CircleMeasure& mu, const Rational& r_turns) {
    detail::require_arc_scale(r_turns);
    if (!vr_member(mu, r_turns)) throw std::domain_error("measure is not a member at this scale");

    std::vector<CircularInterval> excluded = excluded_region(mu, r_turns);
    // Complement components: closed intervals between consecutive excluded ones.
    std::vector<CircularInterval> components;
    components.reserve(excluded.size());
    for (size_t i = 0; i < excluded.size(); ++i) {
        const auto& cur = excluded[i];
        const auto& nxt = excluded[(i + 1) % excluded.size()];
        components.push_back({cur.end, nxt.start});
    }

    ArcDecomposition ad;
    Rational covered = 0;
    for (const auto& comp : components) {
        Rational mass = 0;
        for (const auto& a : mu.atoms())
            if (comp.contains_closed(a.angle)) mass += a.weight;
        if (mass > 0) {
            ad.arcs.push_back(comp);
            ad.masses.push_back(mass);
            covered += mass;
        }
    }

    if (covered != 1) throw std::logic_error("arc masses must exhaust the measure");
    if (ad.arcs.size() % 2 != 1)
        throw std::logic_error("arc count must be odd for a member measure");
    ad.stratum_k = static_cast<int>((ad.arcs.size() - 1) / 2);

    // Deterministic counterclockwise ordering starting from the arc that
    // contains the first (smallest-angle) support atom.
    size_t first = 0;
    while (!ad.arcs[first].contains_closed(mu.atoms().front().angle)) ++first;
    std::rotate(ad.arcs.begin(), ad.arcs.begin() + first, ad.arcs.end());
    std::rotate(ad.masses.begin(), ad.masses.begin() + first, ad.masses.end());
    return ad;
}

inline int stratum(const CircleMeasure& mu, const Rational& r_turns) {
    return arcs(mu, r_turns).stratum_k;
}

/// K = floor(r / (2*pi - 2r)), the largest k with a (2k+1)-gon of diameter <= r.
inline int max_stratum(const Rational& r_turns) {
    detail::require_arc_scale(r_turns);
    return static_cast<int>(rational_floor(r_turns / (1 - 2 * r_turns)));
}

/// Measure supported on the 2k+1 vertices of a regular polygon at angles
/// base + j/(2k+1) turns, with weights in the closed simplex. Stored in the
/// canonical form base in [0, 1/(2k+1)); cyclic relabelings are identified, so
/// equality of the fields is equality of measures.
struct RegularPolygonalMeasure {
    int k = 0;
    Angle base;
    std::vector<Rational> weights;  // size 2k+1, nonnegative, sum 1

    static RegularPolygonalMeasure make(int k, const Angle& base, std::vector<Rational> weights) {
        const int n = 2 * k + 1;
        if (static_cast<int>(weights.size()) != n)
            throw std::invalid_argument("regular polygonal measure needs 2k+1 weights");
        Rational total = 0;
        for (const auto& w : weights) {
            if (w < 0) throw std::invalid_argument("negative polygon weight");
            total += w;
        }
        if (total != 1) throw std::invalid_argument("polygon weights must sum to 1");

        RegularPolygonalMeasure rpm;
        rpm.k = k;
        // Rotate the base into [0, 1/n) and relabel the weights to match.
        Integer shift = rational_floor(base.turns * n);
        int s = static_cast<int>(shift % n);
        rpm.base = Angle::of_turns(base.turns - Rational(shift, n));
        rpm.weights.resize(n);
        for (int j = 0; j < n; ++j) rpm.weights[j] = weights[((j - s) % n + n) % n];
        return rpm;
    }

    bool is_uniform() const {
        const Rational u(1, 2 * k + 1);
        for (const auto& w : weights)
            if (w != u) return false;
        return true;
    }

    Angle vertex(int j) const { return base + Rational(j, 2 * k + 1); }

    CircleMeasure to_measure() const {
        std::vector<std::pair<Angle, Rational>> atoms;
        for (int j = 0; j < 2 * k + 1; ++j)
            if (weights[j] > 0) atoms.emplace_back(vertex(j), weights[j]);
        return CircleMeasure::from_atoms(std::move(atoms));
    }

    bool operator==(const RegularPolygonalMeasure& o) const {
        return k == o.k && base == o.base && weights == o.weights;
    }
    bool operator!=(const RegularPolygonalMeasure& o) const { return !(*this == o); }
};

/// Weighted average of mu onto a regular (2k+1)-gon, with an explicit choice
/// of which arc carries label 0. The cut point y is the midpoint of the gap
/// between the last arc and arc 0; support angles are lifted to (y, y+1) and
///   base = sum_j sum_i a_ij * (theta_ij - j/(2k+1)),
/// vertex j carrying the mass of arc j. The returned canonical form does not
/// depend on arc0_index (relabeling shifts the base by the matching multiple
/// of 1/(2k+1)); the gap-invariance tests re-run every choice.
inline RegularPolygonalMeasure average_with_arc0(const CircleMeasure& mu, const Rational& r_turns,
                                                 size_t arc0_index) {
    ArcDecomposition ad = arcs(mu, r_turns);
    const int n = 2 * ad.stratum_k + 1;
    if (arc0_index >= ad.arcs.size()) throw std::invalid_argument("arc index out of range");

    const CircularInterval& arc0 = ad.arcs[arc0_index];
    const CircularInterval& prev = ad.arcs[(arc0_index + ad.arcs.size() - 1) % ad.arcs.size()];
    // Cut point strictly between the end of the previous arc and the start of
    // arc 0. For a single arc this is the midpoint of its exterior.
    Rational gap = circular_gap(prev.end, arc0.start);
    if (n > 1 && gap == 0) throw std::logic_error("adjacent arcs must be separated");
    if (n == 1) gap = 1 - circular_gap(arc0.start, arc0.end);
    Angle y = prev.end + gap / 2;

    Rational base = 0;
    std::vector<Rational> masses(n);
    for (const auto& atom : mu.atoms()) {
        // Label of the atom's arc, counting counterclockwise from arc 0.
        int j = -1;
        for (size_t i = 0; i < ad.arcs.size(); ++i) {
            if (ad.arcs[(arc0_index + i) % ad.arcs.size()].contains_closed(atom.angle)) {
                j = static_cast<int>(i);
                break;
            }
        }
        if (j < 0) throw std::logic_error("support atom not contained in any arc");
        Rational lifted = y.turns + circular_gap(y, atom.angle);
        base += atom.weight * (lifted - Rational(j, n));
        masses[j] += atom.weight;
    }
    return RegularPolygonalMeasure::make(ad.stratum_k, Angle::of_turns(base), std::move(masses));
}

inline RegularPolygonalMeasure average(const CircleMeasure& mu, const Rational& r_turns) {
    return average_with_arc0(mu, r_turns, 0);
}

/// Quotient relation: same stratum and the same average measure, decided exactly.
inline bool quotient_eq(const CircleMeasure& mu, const CircleMeasure& nu, const Rational& r_turns) {
    ArcDecomposition amu = arcs(mu, r_turns);
    ArcDecomposition anu = arcs(nu, r_turns);
    if (amu.stratum_k != anu.stratum_k) return false;
    return average(mu, r_turns) == average(nu, r_turns);
}

/// Convex split of a regular polygonal measure off the uniform polygon:
///   rho = (1 - t) * boundary + t * uniform(2k+1)-gon at rho.base,
/// with t = (2k+1) * min weight. The boundary part has a zero weight and is
/// absent exactly when t = 1 (rho uniform).
struct PolygonDecomposition {
    Rational t;
    std::optional<RegularPolygonalMeasure> boundary;
    Angle base;
};

inline PolygonDecomposition polygon_decompose(const RegularPolygonalMeasure& rho) {
    const int n = 2 * rho.k + 1;
    Rational min_w = rho.weights[0];
    for (const auto& w : rho.weights)
        if (w < min_w) min_w = w;
    Rational t = Rational(n) * min_w;

    PolygonDecomposition out;
    out.t = t;
    out.base = rho.base;
    if (t == 1) return out;

    std::vector<Rational> bw(n);
    for (int j = 0; j < n; ++j) bw[j] = (rho.weights[j] - min_w) / (1 - t);
    out.boundary = RegularPolygonalMeasure::make(rho.k, rho.base, std::move(bw));
    return out;
}

}  // namespace equivart
