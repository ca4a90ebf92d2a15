#pragma once

#include "equivart/filtration.hpp"

#include <cassert>
#include <optional>
#include <unordered_map>
#include <vector>

namespace equivart {

enum class CoefField { F2, Q };

inline std::string coef_field_name(CoefField f) { return f == CoefField::F2 ? "F2" : "Q"; }

struct PersistenceInterval {
    int dim = 0;
    Rational birth;
    std::optional<Rational> death;  // absent = infinite

    bool operator==(const PersistenceInterval& o) const {
        return dim == o.dim && birth == o.birth && death == o.death;
    }
};

struct Barcode {
    int n = 0;
    int max_dim = 0;
    std::vector<PersistenceInterval> intervals;
};

namespace detail {

// Columns over F2: sorted row indices, low = back.
struct F2Column {
    std::vector<int32_t> rows;
    bool empty() const { return rows.empty(); }
    int32_t low() const { return rows.back(); }
};

inline void add_into(F2Column& target, const F2Column& source) {
    std::vector<int32_t> out;
    out.reserve(target.rows.size() + source.rows.size());
    size_t a = 0, b = 0;
    while (a < target.rows.size() && b < source.rows.size()) {
        if (target.rows[a] < source.rows[b]) out.push_back(target.rows[a++]);
        else if (source.rows[b] < target.rows[a]) out.push_back(source.rows[b++]);
        else { ++a; ++b; }  // mod 2 cancellation
    }
    while (a < target.rows.size()) out.push_back(target.rows[a++]);
    while (b < source.rows.size()) out.push_back(source.rows[b++]);
    target.rows = std::move(out);
}

// Columns over Q: sorted (row, coefficient) with nonzero coefficients.
struct QColumn {
    std::vector<std::pair<int32_t, Rational>> entries;
    bool empty() const { return entries.empty(); }
    int32_t low() const { return entries.back().first; }
    const Rational& low_coeff() const { return entries.back().second; }
};

inline void add_scaled(QColumn& target, const QColumn& source, const Rational& factor) {
    std::vector<std::pair<int32_t, Rational>> out;
    out.reserve(target.entries.size() + source.entries.size());
    size_t a = 0, b = 0;
    while (a < target.entries.size() && b < source.entries.size()) {
        if (target.entries[a].first < source.entries[b].first) out.push_back(target.entries[a++]);
        else if (source.entries[b].first < target.entries[a].first) {
            out.emplace_back(source.entries[b].first, factor * source.entries[b].second);
            ++b;
        } else {
            Rational c = target.entries[a].second + factor * source.entries[b].second;
            if (c != 0) out.emplace_back(target.entries[a].first, std::move(c));
            ++a; ++b;
        }
    }
    while (a < target.entries.size()) out.push_back(target.entries[a++]);
    while (b < source.entries.size()) {
        out.emplace_back(source.entries[b].first, factor * source.entries[b].second);
        ++b;
    }
    target.entries = std::move(out);
}

inline uint64_t vertex_mask(const std::vector<int>& vertices) {
    uint64_t m = 0;
    for (int v : vertices) m |= (uint64_t{1} << v);
    return m;
}

// Boundary facet positions (ascending) with the sign of the facet dropping the
// i-th vertex; signs matter over Q only.
struct BoundaryEntry {
    int32_t row;
    int8_t sign;
    bool operator<(const BoundaryEntry& o) const { return row < o.row; }
};

inline std::vector<BoundaryEntry> boundary_of(const Filtration& f, size_t j,
                                              const std::unordered_map<uint64_t, int32_t>& position) {
    const auto& verts = f.simplices[j].vertices;
    std::vector<BoundaryEntry> out;
    out.reserve(verts.size());
    uint64_t full = vertex_mask(verts);
    for (size_t i = 0; i < verts.size(); ++i) {
        uint64_t facet = full & ~(uint64_t{1} << verts[i]);
        auto it = position.find(facet);
        if (it == position.end()) throw std::logic_error("filtration is not closed under faces");
        out.push_back({it->second, static_cast<int8_t>(i % 2 == 0 ? 1 : -1)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Standard column reduction with the clearing twist: dimensions are processed
// top-down, and columns whose simplex was already used as a pivot row are
// skipped because they are known to reduce to zero.
template <typename Column, typename MakeColumn, typename Eliminate>
void reduce_columns(const Filtration& f, MakeColumn make_column, Eliminate eliminate,
                    std::vector<int32_t>& death_of, std::vector<bool>& is_death) {
    const size_t m = f.simplices.size();
    std::vector<int32_t> pivot_col_of_row(m, -1);
    std::vector<bool> cleared(m, false);
    std::unordered_map<int32_t, Column> reduced;  // death column -> reduced form

    int top = 0;
    for (const auto& s : f.simplices) top = std::max(top, s.dim());

    for (int dim = top; dim >= 1; --dim) {
        for (size_t j = 0; j < m; ++j) {
            if (f.simplices[j].dim() != dim || cleared[j]) continue;
            Column col = make_column(j);
            while (!col.empty()) {
                int32_t lo = col.low();
                int32_t other = pivot_col_of_row[lo];
                if (other < 0) {
                    pivot_col_of_row[lo] = static_cast<int32_t>(j);
                    death_of[lo] = static_cast<int32_t>(j);
                    is_death[j] = true;
                    cleared[lo] = true;
                    reduced.emplace(static_cast<int32_t>(j), std::move(col));
                    break;
                }
                eliminate(col, reduced.at(other));
            }
        }
    }

#ifndef NDEBUG
    // Pairing property: lows of the stored reduced columns are unique.
    std::vector<bool> seen(m, false);
    for (const auto& [j, col] : reduced) {
        assert(!col.empty());
        assert(!seen[col.low()]);
        seen[col.low()] = true;
    }
#endif
}

}  // namespace detail

/// Persistence barcode of a filtration by boundary-matrix reduction over F2 or
/// Q. Zero-length pairs are dropped; unpaired simplices give infinite bars.
inline Barcode persistent_homology(const Filtration& f, CoefField field) {
    if (!f.face_closed) throw std::domain_error("filtration is not closed under faces");
    const size_t m = f.simplices.size();

    std::unordered_map<uint64_t, int32_t> position;
    position.reserve(m * 2);
    for (size_t j = 0; j < m; ++j)
        position.emplace(detail::vertex_mask(f.simplices[j].vertices), static_cast<int32_t>(j));

    std::vector<int32_t> death_of(m, -1);
    std::vector<bool> is_death(m, false);

    if (field == CoefField::F2) {
        auto make = [&](size_t j) {
            detail::F2Column col;
            for (const auto& e : detail::boundary_of(f, j, position)) col.rows.push_back(e.row);
            return col;
        };
        auto elim = [](detail::F2Column& col, const detail::F2Column& other) {
            detail::add_into(col, other);
        };
        detail::reduce_columns<detail::F2Column>(f, make, elim, death_of, is_death);
    } else {
        auto make = [&](size_t j) {
            detail::QColumn col;
            for (const auto& e : detail::boundary_of(f, j, position))
                col.entries.emplace_back(e.row, Rational(e.sign));
            return col;
        };
        auto elim = [](detail::QColumn& col, const detail::QColumn& other) {
            detail::add_scaled(col, other, -col.low_coeff() / other.low_coeff());
        };
        detail::reduce_columns<detail::QColumn>(f, make, elim, death_of, is_death);
    }

    Barcode bc;
    bc.n = f.n;
    bc.max_dim = f.max_dim;
    for (size_t s = 0; s < m; ++s) {
        if (death_of[s] >= 0) {
            Rational birth = f.value_turns(s);
            Rational death = f.value_turns(static_cast<size_t>(death_of[s]));
            if (birth != death)
                bc.intervals.push_back({f.simplices[s].dim(), birth, death});
        } else if (!is_death[s]) {
            bc.intervals.push_back({f.simplices[s].dim(), f.value_turns(s), std::nullopt});
        }
    }
    std::sort(bc.intervals.begin(), bc.intervals.end(), [](const auto& a, const auto& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        if (a.death.has_value() != b.death.has_value()) return !a.death.has_value();
        if (a.death && b.death && *a.death != *b.death) return *a.death < *b.death;
        return false;
    });
    return bc;
}

/// Betti numbers b_0 ... b_{upto_dim-1} at scale r: bars with birth <= r < death.
inline std::vector<long> betti_from_barcode(const Barcode& bc, const Rational& r_turns, int upto_dim) {
    std::vector<long> b(static_cast<size_t>(upto_dim), 0);
    for (const auto& iv : bc.intervals) {
        if (iv.dim >= upto_dim) continue;
        if (iv.birth <= r_turns && (!iv.death || r_turns < *iv.death)) ++b[static_cast<size_t>(iv.dim)];
    }
    return b;
}

inline std::vector<long> betti(int n, const Rational& r_turns, int max_dim, CoefField field,
                               long budget = kDefaultSimplexBudget) {
    Barcode bc = persistent_homology(build_filtration(n, max_dim, budget), field);
    return betti_from_barcode(bc, r_turns, max_dim);
}

/// Alternating sum of bar counts at r, over all computed dimensions.
inline long euler_characteristic_from_barcode(const Barcode& bc, const Rational& r_turns) {
    long chi = 0;
    for (const auto& iv : bc.intervals)
        if (iv.birth <= r_turns && (!iv.death || r_turns < *iv.death))
            chi += (iv.dim % 2 == 0) ? 1 : -1;
    return chi;
}

/// Alternating simplex count of the sublevel complex at r.
inline long euler_characteristic_from_simplices(const Filtration& f, const Rational& r_turns) {
    long chi = 0;
    for (const auto& s : f.simplices)
        if (Rational(s.hops, f.n) <= r_turns) chi += (s.dim() % 2 == 0) ? 1 : -1;
    return chi;
}

}  // namespace equivart
