#pragma once

#include "equivart/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace equivart {

/// Degreewise abelian group of a graded ring: 0, Z^r, or Z/order.
struct GradedPiece {
    enum class Kind { Zero, Free, Cyclic };
    Kind kind = Kind::Zero;
    Integer value = 0;  // rank for Free, order for Cyclic

    static GradedPiece zero() { return {}; }
    static GradedPiece free_rank(Integer r) {
        if (r <= 0) throw std::invalid_argument("free rank must be positive");
        return {Kind::Free, std::move(r)};
    }
    static GradedPiece cyclic(Integer order) {
        if (order < 1) throw std::invalid_argument("cyclic order must be >= 1");
        if (order == 1) return zero();
        return {Kind::Cyclic, std::move(order)};
    }

    bool operator==(const GradedPiece& o) const { return kind == o.kind && value == o.value; }
    bool operator!=(const GradedPiece& o) const { return !(*this == o); }

    std::string str() const {
        switch (kind) {
            case Kind::Zero: return "0";
            case Kind::Free: return value == 1 ? "Z" : "Z^" + value.str();
            case Kind::Cyclic: return "Z/" + value.str();
        }
        return "?";
    }
};

/// Symbolic graded ring, one of Z[u], Z[u]/(c*u^k), or Z[u,a]/(a^2) with
/// deg u = 2 and deg a = 2k-1.
struct GradedRing {
    enum class Kind { FreePoly, CyclicTruncation, FreeWithExteriorGenerator };
    Kind kind = Kind::FreePoly;
    Integer c = 1;  // truncation coefficient, >= 1 (CyclicTruncation only)
    int k = 0;      // truncation exponent, or the k of deg a = 2k-1

    static GradedRing free_poly() { return {Kind::FreePoly, 1, 0}; }
    static GradedRing cyclic_truncation(Integer c, int k) {
        if (c < 1) throw std::invalid_argument("truncation coefficient must be >= 1");
        if (k < 1) throw std::invalid_argument("truncation exponent must be >= 1");
        return {Kind::CyclicTruncation, std::move(c), k};
    }
    static GradedRing exterior(int k) {
        if (k < 1) throw std::invalid_argument("exterior parameter must be >= 1");
        return {Kind::FreeWithExteriorGenerator, 0, k};
    }

    bool operator==(const GradedRing& o) const { return kind == o.kind && c == o.c && k == o.k; }
    bool operator!=(const GradedRing& o) const { return !(*this == o); }

    std::string str() const {
        switch (kind) {
            case Kind::FreePoly: return "Z[u]";
            case Kind::CyclicTruncation: {
                std::string coeff = c == 1 ? "" : c.str();
                std::string power = k == 1 ? "u" : "u^" + std::to_string(k);
                return "Z[u]/(" + coeff + power + ")";
            }
            case Kind::FreeWithExteriorGenerator:
                return "Z[u,a]/(a^2), |a|=" + std::to_string(2 * k - 1);
        }
        return "?";
    }
};

/// Euler class of the sum of line bundles with the given weights: the
/// coefficient is the plain product (possibly zero or negative) in degree
/// 2 * len(ms); the truncation ideal only uses its absolute value.
struct EulerClass {
    Integer coefficient;
    int degree;
};

inline EulerClass euler_class(const std::vector<Integer>& ms) {
    if (ms.empty()) throw std::invalid_argument("need at least one weight");
    Integer prod = 1;
    for (const auto& m : ms) prod *= m;
    return {prod, 2 * static_cast<int>(ms.size())};
}

/// Equivariant cohomology of the weighted join of circles S^1_{m_1} * ... *
/// S^1_{m_k}: Z[u]/(|m_1...m_k| u^k) when the product is nonzero, otherwise
/// Z[u,a]/(a^2) with deg a = 2k-1.
inline GradedRing sphere_ring(const std::vector<Integer>& ms) {
    EulerClass e = euler_class(ms);
    if (e.coefficient == 0) return GradedRing::exterior(static_cast<int>(ms.size()));
    return GradedRing::cyclic_truncation(abs(e.coefficient), static_cast<int>(ms.size()));
}

/// 1 * 3 * 5 * ... * (2k+1).
inline Integer odd_double_factorial(int k) {
    Integer prod = 1;
    for (int j = 0; j <= k; ++j) prod *= (2 * j + 1);
    return prod;
}

/// Band index of a scale: the k with k/(2k+1) <= r < (k+1)/(2k+3) turns, or
/// absent when r >= 1/2 turns (r >= pi). Equals floor(r / (1 - 2r)).
inline std::optional<int> band_index(const Rational& r_turns) {
    if (r_turns < 0) throw std::domain_error("negative scale");
    if (r_turns >= Rational(1, 2)) return std::nullopt;
    return static_cast<int>(rational_floor(r_turns / (1 - 2 * r_turns)));
}

inline Rational band_start_turns(int k) { return Rational(k, 2 * k + 1); }

inline GradedRing vr_ring(const Rational& r_turns) {
    auto k = band_index(r_turns);
    if (!k) return GradedRing::free_poly();
    return GradedRing::cyclic_truncation(odd_double_factorial(*k), *k + 1);
}

/// The free-action guess with every weight replaced by 1: Z[u]/(u^{k+1}).
inline GradedRing naive_guess_ring(const Rational& r_turns) {
    auto k = band_index(r_turns);
    if (!k) return GradedRing::free_poly();
    return GradedRing::cyclic_truncation(1, *k + 1);
}

inline GradedPiece graded_piece(const GradedRing& ring, int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    switch (ring.kind) {
        case GradedRing::Kind::FreePoly:
            return degree % 2 == 0 ? GradedPiece::free_rank(1) : GradedPiece::zero();
        case GradedRing::Kind::CyclicTruncation: {
            if (degree % 2 != 0) return GradedPiece::zero();
            int d = degree / 2;
            if (d < ring.k) return GradedPiece::free_rank(1);
            return GradedPiece::cyclic(ring.c);
        }
        case GradedRing::Kind::FreeWithExteriorGenerator: {
            if (degree % 2 == 0) return GradedPiece::free_rank(1);
            return degree >= 2 * ring.k - 1 ? GradedPiece::free_rank(1) : GradedPiece::zero();
        }
    }
    return GradedPiece::zero();
}

/// Per-degree description of the map induced by the identity on Z[u].
struct DegreeMap {
    enum class Kind { Zero, Identity, Surjection, Reduction };
    Kind kind = Kind::Zero;
    GradedPiece source;
    GradedPiece target;

    bool operator==(const DegreeMap& o) const {
        return kind == o.kind && source == o.source && target == o.target;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Zero: return "zero";
            case Kind::Identity: return "identity " + source.str() + " -> " + target.str();
            case Kind::Surjection: return "surjection " + source.str() + " -> " + target.str();
            case Kind::Reduction: return "reduction " + source.str() + " -> " + target.str();
        }
        return "?";
    }
};

/// Structure map of the persistent module for r <= r': the projection
/// H(r') -> H(r) induced by the identity on Z[u].
struct StructureMap {
    Rational r_turns;       // target scale
    Rational r_prime_turns; // source scale
    GradedRing source;      // ring at r'
    GradedRing target;      // ring at r

    DegreeMap degree_map(int degree) const {
        DegreeMap dm;
        dm.source = graded_piece(source, degree);
        dm.target = graded_piece(target, degree);
        if (degree % 2 != 0 || dm.target == GradedPiece::zero()) {
            dm.kind = DegreeMap::Kind::Zero;
            return dm;
        }
        int d = degree / 2;
        auto free_through = [](const GradedRing& ring, int dd) {
            return ring.kind == GradedRing::Kind::FreePoly || dd < ring.k;
        };
        if (free_through(target, d))
            dm.kind = DegreeMap::Kind::Identity;
        else if (free_through(source, d))
            dm.kind = DegreeMap::Kind::Surjection;
        else
            dm.kind = DegreeMap::Kind::Reduction;
        return dm;
    }
};

inline StructureMap structure_map(const Rational& r_turns, const Rational& r_prime_turns) {
    if (r_turns > r_prime_turns) throw std::domain_error("structure map requires r <= r'");
    StructureMap sm;
    sm.r_turns = r_turns;
    sm.r_prime_turns = r_prime_turns;
    sm.source = vr_ring(r_prime_turns);
    sm.target = vr_ring(r_turns);
    return sm;
}

/// Degreewise composition H(r'') -> H(r') -> H(r); defined for matching scales.
inline DegreeMap compose(const DegreeMap& second, const DegreeMap& first) {
    // `first` maps H(r'') -> H(r'), `second` maps H(r') -> H(r).
    DegreeMap dm;
    dm.source = first.source;
    dm.target = second.target;
    if (second.kind == DegreeMap::Kind::Zero || first.kind == DegreeMap::Kind::Zero) {
        dm.kind = DegreeMap::Kind::Zero;
        return dm;
    }
    const bool source_free = first.source.kind == GradedPiece::Kind::Free;
    const bool target_free = second.target.kind == GradedPiece::Kind::Free;
    if (target_free)
        dm.kind = DegreeMap::Kind::Identity;
    else if (source_free)
        dm.kind = DegreeMap::Kind::Surjection;
    else
        dm.kind = DegreeMap::Kind::Reduction;
    return dm;
}

enum class Field { Q, R, F2, F3 };

inline int field_characteristic(Field f) {
    switch (f) {
        case Field::Q:
        case Field::R: return 0;
        case Field::F2: return 2;
        case Field::F3: return 3;
    }
    return 0;
}

inline std::string field_name(Field f) {
    switch (f) {
        case Field::Q: return "Q";
        case Field::R: return "R";
        case Field::F2: return "F2";
        case Field::F3: return "F3";
    }
    return "?";
}

/// F[u] or F[u]/(u^k) with deg u = 2.
struct FieldRing {
    Field field = Field::Q;
    std::optional<int> trunc_k;

    bool operator==(const FieldRing& o) const { return field == o.field && trunc_k == o.trunc_k; }

    std::string str() const {
        std::string base = field_name(field) + "[u]";
        if (!trunc_k) return base;
        return base + "/(u" + (*trunc_k == 1 ? std::string() : "^" + std::to_string(*trunc_k)) + ")";
    }
};

/// Field-coefficient specialization. The truncation coefficient must be a unit
/// in the field; a characteristic dividing it is rejected rather than patched
/// up, and the exterior case is rejected as out of scope.
inline FieldRing specialize(const GradedRing& ring, Field field) {
    switch (ring.kind) {
        case GradedRing::Kind::FreePoly: return {field, std::nullopt};
        case GradedRing::Kind::CyclicTruncation: {
            int p = field_characteristic(field);
            if (p != 0 && ring.c % p == 0)
                throw std::domain_error("coefficient " + ring.c.str() + " vanishes in " + field_name(field));
            return {field, ring.k};
        }
        case GradedRing::Kind::FreeWithExteriorGenerator:
            throw std::domain_error("field specialization of the exterior ring is not supported");
    }
    throw std::logic_error("unreachable");
}

/// One constant segment of the degreewise barcode over the scale axis:
/// [start, end) in turns, end absent for the unbounded tail.
struct ScaleInterval {
    Rational start_turns;
    std::optional<Rational> end_turns;
    GradedPiece piece;

    bool operator==(const ScaleInterval& o) const {
        return start_turns == o.start_turns && end_turns == o.end_turns && piece == o.piece;
    }
};

/// Maximal constant intervals of graded_piece(vr_ring(r), degree) over
/// r in [0, infinity); the decomposition stabilizes to Z at d/(2d+1) turns.
/// Intervals starting beyond r_max_turns are clipped away.
inline std::vector<ScaleInterval> barcode_over_scale(int degree, const Rational& r_max_turns) {
    if (degree < 0 || degree % 2 != 0) throw std::invalid_argument("degree must be even and nonnegative");
    if (r_max_turns < 0) throw std::domain_error("negative scale bound");
    const int d = degree / 2;

    std::vector<ScaleInterval> raw;
    for (int k = 0; k < d; ++k)
        raw.push_back({band_start_turns(k), band_start_turns(k + 1),
                       GradedPiece::cyclic(odd_double_factorial(k))});
    raw.push_back({band_start_turns(d), std::nullopt, GradedPiece::free_rank(1)});

    std::vector<ScaleInterval> merged;
    for (auto& seg : raw) {
        if (!merged.empty() && merged.back().piece == seg.piece)
            merged.back().end_turns = seg.end_turns;
        else
            merged.push_back(seg);
    }

    std::vector<ScaleInterval> out;
    for (auto& seg : merged)
        if (seg.start_turns <= r_max_turns) out.push_back(seg);
    return out;
}

}  // namespace equivart
