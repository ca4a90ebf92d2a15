#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equivart/json_io.hpp"
#include "equivart/rings.hpp"

#include <cmath>
#include <random>

using namespace equivart;

namespace {

std::vector<Integer> weights(std::initializer_list<long> ms) {
    std::vector<Integer> out;
    for (long m : ms) out.emplace_back(m);
    return out;
}

}  // namespace

TEST_CASE("euler class") {
    EulerClass e = euler_class(weights({1, 3, 5}));
    CHECK(e.coefficient == 15);
    CHECK(e.degree == 6);
    CHECK(euler_class(weights({7})).coefficient == 7);
    CHECK(euler_class(weights({7})).degree == 2);
    CHECK(euler_class(weights({2, 0, 7})).coefficient == 0);
    CHECK(euler_class(weights({-2, 3})).coefficient == -6);
    CHECK_THROWS(euler_class({}));
}

TEST_CASE("sphere ring") {
    CHECK(sphere_ring(weights({1})).str() == "Z[u]/(u)");
    CHECK(sphere_ring(weights({1, 3})).str() == "Z[u]/(3u^2)");
    GradedRing ext = sphere_ring(weights({1, 0}));
    CHECK(ext.kind == GradedRing::Kind::FreeWithExteriorGenerator);
    CHECK(ext.str() == "Z[u,a]/(a^2), |a|=3");
    CHECK(sphere_ring(weights({-1, 3})) == sphere_ring(weights({1, 3})));  // ideal uses |product|
}

TEST_CASE("band selection is exact in turns") {
    CHECK(!band_index(Rational(1, 2)).has_value());
    CHECK(band_index(Rational(0)) == 0);
    CHECK(band_index(Rational(1, 3)) == 1);             // left-closed boundary
    CHECK(band_index(Rational(333, 1000)) == 0);        // just below 1/3
    CHECK(band_index(Rational(2, 5)) == 2);
    CHECK(band_index(Rational(3, 7)) == 3);
    CHECK(band_index(Rational(499, 1000)) == 249);
}

TEST_CASE("vr ring across the bands") {
    CHECK(vr_ring(turns_from_radians(1.0)).str() == "Z[u]/(u)");
    CHECK(vr_ring(turns_from_radians(2.2)).str() == "Z[u]/(3u^2)");
    CHECK(vr_ring(turns_from_radians(2.6)).str() == "Z[u]/(15u^3)");
    CHECK(vr_ring(turns_from_radians(2.7)).str() == "Z[u]/(105u^4)");
    CHECK(vr_ring(turns_from_radians(M_PI)).str() == "Z[u]");
    CHECK(vr_ring(Rational(7, 10)).str() == "Z[u]");  // beyond pi stays free
}

TEST_CASE("vr ring agrees with the sphere ring of odd weights on every band") {
    for (int k = 0; k <= 8; ++k) {
        Rational mid = band_start_turns(k) + Rational(1, 2 * (2 * k + 1) * (2 * k + 3));
        std::vector<Integer> ms;
        for (int j = 0; j <= k; ++j) ms.emplace_back(2 * j + 1);
        CHECK(vr_ring(mid) == sphere_ring(ms));
    }
}

TEST_CASE("graded pieces") {
    GradedRing r15 = GradedRing::cyclic_truncation(3, 2);  // Z[u]/(3u^2)
    CHECK(graded_piece(r15, 0) == GradedPiece::free_rank(1));
    CHECK(graded_piece(r15, 2) == GradedPiece::free_rank(1));
    CHECK(graded_piece(r15, 4) == GradedPiece::cyclic(3));
    CHECK(graded_piece(r15, 3) == GradedPiece::zero());

    GradedRing naive = GradedRing::cyclic_truncation(1, 2);  // Z[u]/(u^2)
    CHECK(graded_piece(naive, 4) == GradedPiece::zero());

    GradedRing ext = GradedRing::exterior(2);  // deg a = 3
    CHECK(graded_piece(ext, 3) == GradedPiece::free_rank(1));
    CHECK(graded_piece(ext, 1) == GradedPiece::zero());
    CHECK(graded_piece(ext, 4) == GradedPiece::free_rank(1));
    CHECK(graded_piece(ext, 7) == GradedPiece::free_rank(1));

    CHECK(graded_piece(GradedRing::free_poly(), 6) == GradedPiece::free_rank(1));
    CHECK(graded_piece(GradedRing::free_poly(), 5) == GradedPiece::zero());
}

TEST_CASE("structure maps between bands 1 and 2") {
    StructureMap sm = structure_map(turns_from_radians(2.2), turns_from_radians(2.6));
    CHECK(sm.source.str() == "Z[u]/(15u^3)");
    CHECK(sm.target.str() == "Z[u]/(3u^2)");

    DegreeMap d4 = sm.degree_map(4);
    CHECK(d4.kind == DegreeMap::Kind::Surjection);
    CHECK(d4.source == GradedPiece::free_rank(1));
    CHECK(d4.target == GradedPiece::cyclic(3));

    DegreeMap d6 = sm.degree_map(6);
    CHECK(d6.kind == DegreeMap::Kind::Reduction);
    CHECK(d6.source == GradedPiece::cyclic(15));
    CHECK(d6.target == GradedPiece::cyclic(3));

    DegreeMap d2 = sm.degree_map(2);
    CHECK(d2.kind == DegreeMap::Kind::Identity);
    CHECK(sm.degree_map(5).kind == DegreeMap::Kind::Zero);
}

TEST_CASE("structure map at equal scales is the identity degreewise") {
    StructureMap sm = structure_map(Rational(11, 30), Rational(11, 30));
    for (int deg = 0; deg <= 10; deg += 2) {
        DegreeMap dm = sm.degree_map(deg);
        if (dm.target == GradedPiece::zero()) {
            CHECK(dm.kind == DegreeMap::Kind::Zero);
        } else {
            CHECK(dm.source == dm.target);
            CHECK((dm.kind == DegreeMap::Kind::Identity || dm.kind == DegreeMap::Kind::Reduction));
            if (dm.kind == DegreeMap::Kind::Reduction) CHECK(dm.source == dm.target);
        }
    }
    CHECK_THROWS_AS(structure_map(Rational(2, 5), Rational(1, 3)), std::domain_error);
}

TEST_CASE("structure maps from the point regime are canonical projections") {
    StructureMap sm = structure_map(Rational(11, 30), Rational(1, 2));
    CHECK(sm.source == GradedRing::free_poly());
    CHECK(sm.degree_map(0).kind == DegreeMap::Kind::Identity);
    CHECK(sm.degree_map(2).kind == DegreeMap::Kind::Identity);
    CHECK(sm.degree_map(4).kind == DegreeMap::Kind::Surjection);

    StructureMap both = structure_map(Rational(1, 2), Rational(3, 5));
    for (int deg = 0; deg <= 8; deg += 2) CHECK(both.degree_map(deg).kind == DegreeMap::Kind::Identity);
}

TEST_CASE("composition law on sampled triples") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<long> num(0, 4199);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> rs{Rational(num(rng), 7000), Rational(num(rng), 7000),
                                 Rational(num(rng), 7000)};
        std::sort(rs.begin(), rs.end());
        StructureMap ab = structure_map(rs[1], rs[2]);
        StructureMap bc = structure_map(rs[0], rs[1]);
        StructureMap ac = structure_map(rs[0], rs[2]);
        for (int deg = 0; deg <= 14; ++deg)
            CHECK(compose(bc.degree_map(deg), ab.degree_map(deg)) == ac.degree_map(deg));
    }
}

TEST_CASE("field specialization") {
    GradedRing r = GradedRing::cyclic_truncation(15, 3);
    CHECK(specialize(r, Field::F2).str() == "F2[u]/(u^3)");
    CHECK(specialize(r, Field::Q).str() == "Q[u]/(u^3)");
    CHECK(specialize(r, Field::R).str() == "R[u]/(u^3)");
    CHECK(specialize(GradedRing::free_poly(), Field::F2).str() == "F2[u]");
    CHECK_THROWS_AS(specialize(r, Field::F3), std::domain_error);  // 3 divides 15
    CHECK_THROWS_AS(specialize(GradedRing::exterior(2), Field::Q), std::domain_error);
}

TEST_CASE("naive guess ring differs from the true ring beyond band 0") {
    CHECK(naive_guess_ring(turns_from_radians(1.0)).str() == "Z[u]/(u)");
    CHECK(naive_guess_ring(turns_from_radians(2.2)).str() == "Z[u]/(u^2)");
    CHECK(naive_guess_ring(turns_from_radians(2.6)).str() == "Z[u]/(u^3)");

    // Band 0: all degrees agree. Band 1: degrees below 4 agree, degree 4 differs.
    for (int deg = 0; deg <= 12; ++deg)
        CHECK(graded_piece(naive_guess_ring(Rational(1, 8)), deg) ==
              graded_piece(vr_ring(Rational(1, 8)), deg));
    Rational band1 = turns_from_radians(2.2);
    for (int deg = 0; deg < 4; ++deg)
        CHECK(graded_piece(naive_guess_ring(band1), deg) == graded_piece(vr_ring(band1), deg));
    CHECK(graded_piece(naive_guess_ring(band1), 4) == GradedPiece::zero());
    CHECK(graded_piece(vr_ring(band1), 4) == GradedPiece::cyclic(3));
}

TEST_CASE("barcode over the scale axis") {
    auto deg0 = barcode_over_scale(0, Rational(1, 2));
    REQUIRE(deg0.size() == 1);
    CHECK(deg0[0].start_turns == 0);
    CHECK(!deg0[0].end_turns.has_value());
    CHECK(deg0[0].piece == GradedPiece::free_rank(1));

    auto deg2 = barcode_over_scale(2, Rational(1, 2));
    REQUIRE(deg2.size() == 2);
    CHECK(deg2[0].piece == GradedPiece::zero());
    CHECK(deg2[0].end_turns == Rational(1, 3));
    CHECK(deg2[1].start_turns == Rational(1, 3));
    CHECK(!deg2[1].end_turns.has_value());

    auto deg4 = barcode_over_scale(4, Rational(1, 2));
    REQUIRE(deg4.size() == 3);
    CHECK(deg4[0].piece == GradedPiece::zero());
    CHECK(deg4[1].start_turns == Rational(1, 3));
    CHECK(deg4[1].end_turns == Rational(2, 5));
    CHECK(deg4[1].piece == GradedPiece::cyclic(3));
    CHECK(deg4[2].start_turns == Rational(2, 5));
    CHECK(!deg4[2].end_turns.has_value());
    CHECK(deg4[2].piece == GradedPiece::free_rank(1));

    CHECK_THROWS(barcode_over_scale(3, Rational(1, 2)));
}

TEST_CASE("barcode intervals agree pointwise with the ring pieces") {
    for (int degree : {0, 2, 4, 6, 8}) {
        auto intervals = barcode_over_scale(degree, Rational(1, 2));
        // Sample inside every interval and exactly at each critical endpoint.
        std::vector<Rational> samples{Rational(0)};
        for (const auto& iv : intervals) {
            samples.push_back(iv.start_turns);
            Rational end = iv.end_turns ? *iv.end_turns : Rational(1, 2) + Rational(1, 10);
            samples.push_back((iv.start_turns + end) / 2);
        }
        for (const auto& r : samples) {
            GradedPiece expected = graded_piece(vr_ring(r), degree);
            const ScaleInterval* hit = nullptr;
            for (const auto& iv : intervals)
                if (iv.start_turns <= r && (!iv.end_turns || r < *iv.end_turns)) hit = &iv;
            REQUIRE(hit != nullptr);
            CHECK(hit->piece == expected);
        }
    }
}

TEST_CASE("ring strings and JSON view") {
    CHECK(GradedRing::cyclic_truncation(1, 1).str() == "Z[u]/(u)");
    CHECK(GradedRing::cyclic_truncation(3, 1).str() == "Z[u]/(3u)");
    CHECK(GradedPiece::cyclic(1) == GradedPiece::zero());
    CHECK(GradedPiece::cyclic(15).str() == "Z/15");
    Json j = scale_interval_to_json(barcode_over_scale(4, Rational(1, 2))[1]);
    CHECK(j["start_turns"] == "1/3");
    CHECK(j["piece"] == "Z/3");
}
