#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equivart/join.hpp"
#include "equivart/json_io.hpp"
#include "support/generators.hpp"

#include <cmath>

using namespace equivart;
using equivart::testing::Rng;

namespace {

Angle turns(long p, long q) { return Angle::of_turns(Rational(p, q)); }

JoinPoint jp(std::vector<std::tuple<int, Rational, Rational>> comps) {
    std::vector<JoinComponent> c;
    for (auto& [idx, t, base] : comps) c.push_back({idx, t, Angle::of_turns(base)});
    return JoinPoint::make(std::move(c));
}

CircleMeasure lopsided_3gon() {
    return CircleMeasure::from_atoms({{turns(0, 1), Rational(1, 2)},
                                      {turns(1, 3), Rational(1, 4)},
                                      {turns(2, 3), Rational(1, 4)}});
}

}  // namespace

TEST_CASE("phi on deltas and polygons") {
    CHECK(phi(CircleMeasure::dirac(turns(1, 8)), Rational(1, 4)) ==
          jp({{1, Rational(1), Rational(1, 8)}}));

    Rational r = turns_from_radians(2.2);
    CHECK(phi(testing::uniform_polygon(1, turns(1, 7)), r) ==
          jp({{3, Rational(1), Rational(1, 7) - Rational(0)}}));  // 1/7 < 1/3, already canonical

    // Weights (1/2, 1/4, 1/4): one peel leaves the delta at vertex 0.
    CHECK(phi(lopsided_3gon(), r) ==
          jp({{1, Rational(1, 4), Rational(0)}, {3, Rational(3, 4), Rational(0)}}));
}

TEST_CASE("phi coefficients always sum to one and bases are canonical") {
    Rng rng(31);
    for (int i = 0; i < 80; ++i) {
        int k = i % 3;
        Rational r = testing::random_scale_in_band(rng, k);
        JoinPoint p = phi(testing::clustered_measure(rng, k, r), r);
        Rational total = 0;
        for (const auto& c : p.components) {
            total += c.t;
            CHECK(c.index % 2 == 1);
            CHECK(c.base.turns < Rational(1, c.index));
        }
        CHECK(total == 1);
        CHECK(p.components.back().index == 2 * k + 1);  // top stratum always contributes
    }
}

TEST_CASE("g_n formula instantiation") {
    CHECK(g_n(CircleMeasure::dirac(turns(0, 1)), 3) == testing::uniform_polygon(1, turns(0, 1)));

    CircleMeasure two = CircleMeasure::from_atoms(
        {{turns(0, 1), Rational(1, 2)}, {turns(1, 2), Rational(1, 2)}});
    CircleMeasure img = g_n(two, 3);
    REQUIRE(img.support_size() == 6);
    for (int j = 0; j < 6; ++j) {
        CHECK(img.atoms()[j].angle == turns(j, 6));
        CHECK(img.atoms()[j].weight == Rational(1, 6));
    }

    CHECK_THROWS_AS(g_n(two, 2), std::domain_error);
    CHECK_THROWS_AS(g_n(two, 0), std::domain_error);
    CHECK_THROWS_AS(g_n(two, -3), std::domain_error);
}

TEST_CASE("g_n shrinks the gap to pi by exactly 1/n on a 2-atom example") {
    CircleMeasure mu = CircleMeasure::from_atoms(
        {{turns(0, 1), Rational(1, 2)}, {turns(1, 3), Rational(1, 2)}});
    // diam = 1/3 turn = pi - pi/3; the pulled-back diameter is pi - pi/9.
    CHECK(g_n(mu, 3).diameter_turns() == Rational(1, 2) - (Rational(1, 2) - Rational(1, 3)) / 3);
    CHECK(g_n(mu, 3).diameter_turns() == Rational(4, 9));
}

TEST_CASE("g_n lands in the cyclic fixed set") {
    Rng rng(37);
    for (int i = 0; i < 50; ++i) {
        int k = i % 3;
        int n = (i % 2 == 0) ? 3 : 5;
        Rational r = testing::random_scale_in_band(rng, k);
        CircleMeasure mu = testing::clustered_measure(rng, k, r);
        CircleMeasure img = g_n(mu, n);
        CHECK(rotate(img, turns(1, n)) == img);
    }
}

TEST_CASE("h embedding") {
    CHECK(h_embed(jp({{1, Rational(1), Rational(1, 5)}}), 3) ==
          jp({{3, Rational(1), Rational(1, 15)}}));
    CHECK(h_embed(jp({{3, Rational(1), Rational(0)}}), 3) == jp({{9, Rational(1), Rational(0)}}));
    CHECK(h_embed(jp({{1, Rational(1, 4), Rational(0)}, {3, Rational(3, 4), Rational(0)}}), 3) ==
          jp({{3, Rational(1, 4), Rational(0)}, {9, Rational(3, 4), Rational(0)}}));
    CHECK_THROWS_AS(h_embed(jp({{1, Rational(1), Rational(0)}}), 2), std::domain_error);
}

TEST_CASE("h is injective and lands in the fixed set") {
    Rng rng(41);
    std::vector<JoinPoint> images;
    for (int i = 0; i < 30; ++i) {
        int k = i % 3;
        Rational r = testing::random_scale_in_band(rng, k);
        JoinPoint p = phi(testing::clustered_measure(rng, k, r), r);
        JoinPoint hp = h_embed(p, 3);
        CHECK(fixed_by(hp, 3));
        for (const auto& other : images) CHECK_FALSE(hp == other);
        images.push_back(hp);
    }
}

TEST_CASE("circle action on join coordinates") {
    JoinPoint gon = jp({{3, Rational(1), Rational(0)}});
    CHECK(act(turns(1, 3), gon) == gon);  // 2pi/3 fixes the 3-gon circle
    CHECK(act(turns(1, 2), jp({{1, Rational(1), Rational(0)}})) ==
          jp({{1, Rational(1), Rational(1, 2)}}));
}

TEST_CASE("fixed point predicate") {
    CHECK(fixed_by(jp({{3, Rational(1), Rational(0)}}), 3));
    CHECK_FALSE(fixed_by(jp({{1, Rational(1), Rational(0)}}), 3));
    CHECK_FALSE(fixed_by(jp({{1, Rational(1, 4), Rational(0)}, {3, Rational(3, 4), Rational(0)}}), 3));
    CHECK(fixed_by(jp({{3, Rational(1), Rational(0)}}), 1));
    CHECK_FALSE(fixed_by(jp({{3, Rational(1), Rational(0)}}), 2));  // even orders never fix
    CHECK_THROWS_AS(fixed_by(jp({{1, Rational(1), Rational(0)}}), 0), std::domain_error);
}

TEST_CASE("phi is equivariant") {
    Rng rng(43);
    for (int i = 0; i < 60; ++i) {
        int k = i % 3;
        Rational r = testing::random_scale_in_band(rng, k);
        CircleMeasure mu = testing::clustered_measure(rng, k, r);
        Angle theta = testing::random_angle(rng);
        CHECK(phi(rotate(mu, theta), r) == act(theta, phi(mu, r)));
    }
}

TEST_CASE("phi respects the quotient relation") {
    Rng rng(47);
    for (int i = 0; i < 60; ++i) {
        int k = i % 3;
        Rational r = testing::random_scale_in_band(rng, k);
        CircleMeasure mu = testing::clustered_measure(rng, k, r);
        CircleMeasure nu = testing::split_partner(rng, mu, k);
        REQUIRE(quotient_eq(mu, nu, r));
        CHECK(phi(mu, r) == phi(nu, r));
    }
}

TEST_CASE("phi is stable in the scale while the arcs persist") {
    Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        int k = i % 3;
        Rational r = testing::random_scale_in_band(rng, k);
        CircleMeasure mu = testing::clustered_measure(rng, k, r);
        // Larger scale in the same band, then one in the next band up.
        Rational r_same = r + (Rational(k + 1, 2 * k + 3) - r) / 2;
        Rational r_up = testing::random_scale_in_band(rng, k + 1);
        for (const Rational& r2 : {r_same, r_up}) {
            if (stratum(mu, r2) != k) continue;  // only test persisting decompositions
            CHECK(phi(mu, r2) == phi(mu, r));
        }
    }
}

TEST_CASE("commuting square: pinned examples") {
    CommutingSquare s1 = commuting_square(CircleMeasure::dirac(turns(0, 1)), turns_from_radians(1.0), 3);
    CHECK(s1.equal);
    CHECK(s1.via_embed == jp({{3, Rational(1), Rational(0)}}));

    Rational r = turns_from_radians(2.2);
    CommutingSquare s2 = commuting_square(testing::uniform_polygon(1, turns(0, 1)), r, 3);
    CHECK(s2.equal);
    CHECK(s2.via_embed == jp({{9, Rational(1), Rational(0)}}));

    CommutingSquare s3 = commuting_square(lopsided_3gon(), r, 3);
    CHECK(s3.equal);
    CHECK(s3.via_embed == jp({{3, Rational(1, 4), Rational(0)}, {9, Rational(3, 4), Rational(0)}}));
}

TEST_CASE("join point JSON round-trip") {
    JoinPoint p = jp({{1, Rational(1, 4), Rational(0)}, {3, Rational(3, 4), Rational(1, 7)}});
    Json j = join_point_to_json(p);
    CHECK(join_point_from_json(j) == p);
    CHECK(j["components"][0]["t"] == "1/4");
    CHECK(j["components"][1]["base_turns"] == "1/7");
}

TEST_CASE("continuity report runs along a convex path") {
    Rational r(90, 256);
    CircleMeasure a = testing::uniform_polygon(1, turns(0, 1));
    CircleMeasure b = testing::uniform_polygon(1, turns(1, 100));
    ContinuityReport rep = phi_continuity_report(a, b, r, 8);
    CHECK(rep.samples == 9);
    CHECK(rep.max_step >= 0);
}
