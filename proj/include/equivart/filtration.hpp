#pragma once

#include "equivart/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace equivart {

inline constexpr long kDefaultSimplexBudget = 500000;

/// Vietoris-Rips filtration on n evenly spaced circle points. Filtration
/// values are stored as circular hop counts (value in turns = hops / n) so all
/// comparisons stay exact. Simplices are ordered by (value, dimension,
/// lexicographic vertex list); faces always precede cofaces.
struct Filtration {
    struct Simplex {
        int hops = 0;                // geodesic diameter of the vertex set, in 1/n turns
        std::vector<int> vertices;   // sorted ascending
        int dim() const { return static_cast<int>(vertices.size()) - 1; }
    };

    int n = 0;
    int max_dim = 0;
    bool face_closed = true;  // false for group-invariant restrictions
    std::vector<Simplex> simplices;

    Rational value_turns(size_t i) const { return Rational(simplices[i].hops, n); }
};

namespace detail {

inline int circular_hops(int i, int j, int n) {
    int d = std::abs(i - j);
    return std::min(d, n - d);
}

inline int hop_diameter(const std::vector<int>& vertices, int n) {
    int best = 0;
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b)
            best = std::max(best, circular_hops(vertices[a], vertices[b], n));
    return best;
}

inline void sort_filtration(std::vector<Filtration::Simplex>& simplices) {
    std::sort(simplices.begin(), simplices.end(), [](const auto& a, const auto& b) {
        if (a.hops != b.hops) return a.hops < b.hops;
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace detail

/// All vertex subsets of size <= max_dim + 1 with their diameters. Throws when
/// the total simplex count exceeds the budget.
inline Filtration build_filtration(int n, int max_dim, long budget = kDefaultSimplexBudget) {
    if (n < 3) throw std::invalid_argument("need at least 3 vertices");
    if (n > 62) throw std::invalid_argument("vertex count capped at 62");
    if (max_dim < 0) throw std::invalid_argument("negative max_dim");

    Integer total = 0;
    for (int s = 1; s <= max_dim + 1; ++s) total += detail::binomial(n, s);
    if (total > budget)
        throw std::domain_error("simplex budget exceeded: " + total.str() + " > " +
                                std::to_string(budget));

    Filtration f;
    f.n = n;
    f.max_dim = std::min(max_dim, n - 1);
    f.simplices.reserve(total.convert_to<size_t>());

    // Enumerate subsets size by size with a rolling index vector.
    for (int size = 1; size <= f.max_dim + 1; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            f.simplices.push_back({detail::hop_diameter(idx, n), idx});
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == n - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    detail::sort_filtration(f.simplices);
    return f;
}

/// Restriction to simplices invariant under the vertex shift j -> j + n/d.
/// Invariant vertex sets are unions of shift orbits (regular d-gons), so this
/// family is closed under removing whole orbits but not under arbitrary faces.
inline Filtration fixed_subcomplex(int n, int d, int max_dim, long budget = kDefaultSimplexBudget) {
    if (d < 2) throw std::domain_error("divisor must be at least 2");
    if (n % d != 0) throw std::domain_error(std::to_string(d) + " does not divide " + std::to_string(n));
    if (max_dim < 0) throw std::invalid_argument("negative max_dim");

    const int orbits = n / d;
    const int max_orbits = std::min(orbits, (max_dim + 1) / d);
    Integer total = 0;
    for (int s = 1; s <= max_orbits; ++s) total += detail::binomial(orbits, s);
    if (total > budget) throw std::domain_error("simplex budget exceeded");

    Filtration f;
    f.n = n;
    f.max_dim = max_dim;
    f.face_closed = false;

    for (int size = 1; size <= max_orbits; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::vector<int> verts;
            verts.reserve(static_cast<size_t>(size) * d);
            for (int o : idx)
                for (int t = 0; t < d; ++t) verts.push_back(o + t * orbits);
            std::sort(verts.begin(), verts.end());
            f.simplices.push_back({detail::hop_diameter(verts, n), std::move(verts)});
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == orbits - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    detail::sort_filtration(f.simplices);
    return f;
}

/// Minimum filtration value of the invariant subcomplex, in turns: the
/// diameter of a single shift orbit, which is a regular d-gon.
inline Rational first_fixed_scale_turns(int n, int d) {
    if (d < 2) throw std::domain_error("divisor must be at least 2");
    if (n % d != 0) throw std::domain_error(std::to_string(d) + " does not divide " + std::to_string(n));
    std::vector<int> orbit;
    orbit.reserve(d);
    for (int t = 0; t < d; ++t) orbit.push_back(t * (n / d));
    return Rational(detail::hop_diameter(orbit, n), n);
}

/// Plain-text export, one simplex per line: "value_turns dim v0 v1 ...".
inline void export_filtration_text(const Filtration& f, std::ostream& os) {
    for (const auto& s : f.simplices) {
        os << format_rational(Rational(s.hops, f.n)) << ' ' << s.dim();
        for (int v : s.vertices) os << ' ' << v;
        os << '\n';
    }
}

}  // namespace equivart
