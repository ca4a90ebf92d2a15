#pragma once

#include "equivart/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace equivart {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Point on the circle stored as an exact rational number of turns in [0, 1).
/// One turn is 2*pi radians; all arithmetic wraps mod 1 exactly. Radians exist
/// only as a floating-point view for output.
struct Angle {
    Rational turns;  // canonical representative, 0 <= turns < 1

    Angle() : turns(0) {}

    static Angle of_turns(const Rational& t) {
        Angle a;
        a.turns = t - rational_floor(t);
        return a;
    }

    double radians() const { return to_double(turns) * kTwoPi; }

    bool operator==(const Angle& o) const { return turns == o.turns; }
    bool operator!=(const Angle& o) const { return turns != o.turns; }
    bool operator<(const Angle& o) const { return turns < o.turns; }
};

inline Angle operator+(const Angle& a, const Angle& b) { return Angle::of_turns(a.turns + b.turns); }
inline Angle operator+(const Angle& a, const Rational& t) { return Angle::of_turns(a.turns + t); }
inline Angle operator-(const Angle& a, const Angle& b) { return Angle::of_turns(a.turns - b.turns); }

/// Counterclockwise gap from `from` to `to`, in [0, 1) turns.
inline Rational circular_gap(const Angle& from, const Angle& to) {
    Rational d = to.turns - from.turns;
    return d - rational_floor(d);
}

/// Intrinsic circle metric, in turns: min(|a-b|, 1-|a-b|), in [0, 1/2].
inline Rational geodesic_distance_turns(const Angle& a, const Angle& b) {
    Rational g = circular_gap(a, b);
    return g <= Rational(1, 2) ? g : 1 - g;
}

inline double geodesic_distance_radians(const Angle& a, const Angle& b) {
    return to_double(geodesic_distance_turns(a, b)) * kTwoPi;
}

// Snapping tolerance for float-radian input, in turns. 16/10^14 turns is just
// above 1e-12 radians, the documented rounding window.
inline const Rational& radian_snap_tolerance_turns() {
    static const Rational tol(16, Integer("100000000000000"));
    return tol;
}

/// Converts float radians to the smallest-denominator rational number of turns
/// within ~1e-12 radians. Critical scales like pi or 2*pi*k/(2k+1) entered as
/// doubles land exactly on their rational values.
inline Rational turns_from_radians(double radians) {
    if (!std::isfinite(radians)) throw std::invalid_argument("non-finite radians");
    Rational x = exact_rational_from_double(radians / kTwoPi);
    return simplest_rational_in(x - radian_snap_tolerance_turns(), x + radian_snap_tolerance_turns());
}

inline Angle angle_from_radians(double radians) { return Angle::of_turns(turns_from_radians(radians)); }

}  // namespace equivart
