#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wall_crossings.hpp"
#include "wpd/wall_crossing.hpp"

using namespace wpd;

TEST(WallCrossing, SquareSingleWall) {
    Polytope P = hypercube(2);
    auto a = make_polarizing(P, {Rational(1), Rational(2)});
    auto b = make_polarizing(P, {Rational(-1), Rational(2)});
    auto cs = single_wall_crossings(P, a, b);
    ASSERT_EQ(cs.size(), 1u);
    EXPECT_EQ(cs[0].normal, (QVector{Rational(1), Rational(0)}));
    EXPECT_EQ(cs[0].edges.size(), 2u);
    for (const auto& x : testing_support::probe_points(P)) {
        auto r = check_wall_crossing(P, cs[0], x);
        EXPECT_TRUE(r.ok()) << str(x);
        for (const auto& t : r.terms)
            EXPECT_TRUE(t.matches_case()) << str(x) << " " << to_string(t.kind);
    }
}

TEST(WallCrossing, SimultaneousWallsSkipped) {
    Polytope P = hypercube(2);
    // crosses x = 0 and y = 0 at the same parameter
    auto cs = single_wall_crossings(P, make_polarizing(P, {Rational(1), Rational(1)}),
                                    make_polarizing(P, {Rational(-1), Rational(-1)}));
    EXPECT_TRUE(cs.empty());
}

TEST(WallCrossing, CancellationOnAllTestPolytopes) {
    std::mt19937_64 rng(41);
    int in_face = 0, off_face = 0;
    for (const auto& [name, P] : oracle::test_polytopes()) {
        auto crossings = testing_support::engineered_crossings(P, rng, 2);
        auto pts = testing_support::probe_points(P);
        for (const auto& c : crossings) {
            for (const auto& x : pts) {
                auto r = check_wall_crossing(P, c.crossing, x);
                ASSERT_TRUE(r.ok()) << name << " at " << str(x);
                for (const auto& t : r.terms) {
                    EXPECT_TRUE(t.matches_case()) << name << " at " << str(x) << " " << to_string(t.kind);
                    in_face += t.kind == CrossingCase::EdgeInFace;
                    off_face += t.kind == CrossingCase::EdgeOffFace;
                }
            }
        }
    }
    EXPECT_GT(in_face, 0);
    EXPECT_GT(off_face, 0);
}
