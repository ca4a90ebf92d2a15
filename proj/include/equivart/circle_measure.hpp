#pragma once

#include "equivart/angle.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace equivart {

/// Finitely supported probability measure on the circle with exact rational
/// angles and weights. Atoms are kept sorted by angle, duplicate angles merged,
/// weights strictly positive and summing to exactly 1.
class CircleMeasure {
public:
    struct Atom {
        Angle angle;
        Rational weight;
    };

    CircleMeasure() = default;

    static CircleMeasure from_atoms(std::vector<std::pair<Angle, Rational>> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const auto& a, const auto& b) { return a.first.turns < b.first.turns; });
        CircleMeasure mu;
        Rational total = 0;
        for (const auto& [angle, w] : raw) {
            if (w < 0) throw std::invalid_argument("negative atom weight");
            if (w == 0) continue;
            total += w;
            if (!mu.atoms_.empty() && mu.atoms_.back().angle == angle)
                mu.atoms_.back().weight += w;
            else
                mu.atoms_.push_back({angle, w});
        }
        if (mu.atoms_.empty()) throw std::invalid_argument("measure has no mass");
        if (total != 1) throw std::invalid_argument("atom weights must sum to exactly 1");
        return mu;
    }

    static CircleMeasure dirac(const Angle& a) { return from_atoms({{a, Rational(1)}}); }

    const std::vector<Atom>& atoms() const { return atoms_; }
    size_t support_size() const { return atoms_.size(); }

    /// Max pairwise geodesic distance over the support, in turns; 0 for a singleton.
    Rational diameter_turns() const {
        Rational best = 0;
        for (size_t i = 0; i < atoms_.size(); ++i)
            for (size_t j = i + 1; j < atoms_.size(); ++j) {
                Rational d = geodesic_distance_turns(atoms_[i].angle, atoms_[j].angle);
                if (d > best) best = d;
            }
        return best;
    }

    bool operator==(const CircleMeasure& o) const {
        if (atoms_.size() != o.atoms_.size()) return false;
        for (size_t i = 0; i < atoms_.size(); ++i)
            if (atoms_[i].angle != o.atoms_[i].angle || atoms_[i].weight != o.atoms_[i].weight)
                return false;
        return true;
    }
    bool operator!=(const CircleMeasure& o) const { return !(*this == o); }

private:
    std::vector<Atom> atoms_;
};

/// Membership in the Vietoris-Rips thickening at scale r (turns): closed
/// condition diameter <= r, decided exactly.
inline bool vr_member(const CircleMeasure& mu, const Rational& r_turns) {
    if (r_turns < 0) throw std::domain_error("negative scale");
    return mu.diameter_turns() <= r_turns;
}

inline CircleMeasure rotate(const CircleMeasure& mu, const Angle& theta) {
    std::vector<std::pair<Angle, Rational>> atoms;
    atoms.reserve(mu.atoms().size());
    for (const auto& a : mu.atoms()) atoms.emplace_back(a.angle + theta, a.weight);
    return CircleMeasure::from_atoms(std::move(atoms));
}

/// 1-Wasserstein distance with the geodesic ground metric, in turns.
///
/// Both cumulative functions are lifted to step functions on [0, 1); the
/// optimal circular transport shifts the cumulative difference by a weighted
/// median, after which the cost is the L1 norm of the shifted difference.
inline Rational w1_distance_turns(const CircleMeasure& mu, const CircleMeasure& nu) {
    std::vector<Rational> cuts;
    cuts.reserve(mu.atoms().size() + nu.atoms().size());
    for (const auto& a : mu.atoms()) cuts.push_back(a.angle.turns);
    for (const auto& a : nu.atoms()) cuts.push_back(a.angle.turns);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Piecewise-constant difference of cumulatives on [cuts[i], cuts[i+1]).
    const size_t m = cuts.size();
    std::vector<Rational> value(m);
    std::vector<Rational> length(m);
    {
        Rational fmu = 0, fnu = 0;
        size_t imu = 0, inu = 0;
        for (size_t i = 0; i < m; ++i) {
            while (imu < mu.atoms().size() && mu.atoms()[imu].angle.turns == cuts[i])
                fmu += mu.atoms()[imu++].weight;
            while (inu < nu.atoms().size() && nu.atoms()[inu].angle.turns == cuts[i])
                fnu += nu.atoms()[inu++].weight;
            value[i] = fmu - fnu;
            length[i] = (i + 1 < m ? cuts[i + 1] : cuts[0] + 1) - cuts[i];
        }
    }

    // Weighted median of the step values, weights = segment lengths.
    std::vector<size_t> order(m);
    for (size_t i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return value[a] < value[b]; });
    Rational half(1, 2), acc = 0, median = 0;
    for (size_t i : order) {
        acc += length[i];
        if (acc >= half) {
            median = value[i];
            break;
        }
    }

    Rational cost = 0;
    for (size_t i = 0; i < m; ++i) {
        Rational d = value[i] - median;
        if (d < 0) d = -d;
        cost += d * length[i];
    }
    return cost;
}

}  // namespace equivart
