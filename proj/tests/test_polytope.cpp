#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wpd/errors.hpp"
#include "wpd/linalg.hpp"
#include "wpd/polytope.hpp"
#include "wpd/polytope_io.hpp"

using namespace wpd;

namespace {

std::vector<QVector> points(const Polytope& P) {
    std::vector<QVector> out;
    for (const auto& v : P.vertices())
        out.push_back(v.point);
    return out;
}

QVector q(std::initializer_list<long> v) {
    QVector out;
    for (long x : v)
        out.push_back(Rational(x));
    return out;
}

} // namespace

TEST(Polytope, UnitSquare) {
    Polytope P = hypercube(2);
    EXPECT_EQ(points(P), (std::vector<QVector>{q({0, 0}), q({0, 1}), q({1, 0}), q({1, 1})}));
    EXPECT_TRUE(P.is_regular());
    EXPECT_TRUE(P.is_integral());
    EXPECT_EQ(P.edges().size(), 4u);
    const auto& v0 = P.vertices()[0];
    EXPECT_EQ(v0.edge_vectors, (std::vector<QVector>{q({1, 0}), q({0, 1})}));
}

TEST(Polytope, Trapezoid) {
    Polytope P = trapezoid();
    EXPECT_EQ(points(P), (std::vector<QVector>{q({0, 0}), q({0, 1}), q({1, 1}), q({2, 0})}));
    EXPECT_TRUE(P.is_regular());
    auto v = P.find_vertex(q({2, 0}));
    ASSERT_TRUE(v);
    for (const auto& e : P.vertices()[*v].edge_vectors)
        EXPECT_TRUE(e == q({-1, 0}) || e == q({-1, 1}));
}

TEST(Polytope, SkewTriangleIsNotRegular) {
    Polytope P = skew_triangle();
    EXPECT_TRUE(P.is_integral());
    EXPECT_FALSE(P.is_regular());
    auto v = P.find_vertex(q({0, 1}));
    ASSERT_TRUE(v);
    EXPECT_EQ(edge_determinant(P.vertices()[*v]).abs(), Rational(2));
    EXPECT_THROW(P.require_regular_integral("test"), HypothesisError);
}

TEST(Polytope, DilatedSimplexNotIntegral) {
    Polytope P = dilated_simplex(2, Rational(1, 2));
    EXPECT_FALSE(P.is_integral());
    EXPECT_TRUE(P.is_regular());
}

TEST(Polytope, OctahedronRejected) {
    try {
        Polytope P(octahedron_facets());
        FAIL() << "octahedron accepted";
    } catch (const GeometryError& e) {
        EXPECT_NE(std::string(e.what()).find("not simple"), std::string::npos);
    }
}

TEST(Polytope, InvalidInputs) {
    auto hs = [](QVector n, long off) { return HalfSpace{std::move(n), Rational(off)}; };
    // empty
    EXPECT_THROW(Polytope({hs(q({1}), 1), hs(q({-1}), 0)}), GeometryError);
    // unbounded
    EXPECT_THROW(Polytope({hs(q({1, 0}), 0), hs(q({0, 1}), 0), hs(q({1, 1}), 1)}), GeometryError);
    // zero normal
    EXPECT_THROW(Polytope({hs(q({0}), 0), hs(q({1}), 0), hs(q({-1}), -1)}), GeometryError);
    // redundant facet
    EXPECT_THROW(Polytope({hs(q({1}), 0), hs(q({-1}), -1), hs(q({1}), -5)}), GeometryError);
}

// Every edge is a segment between two vertices sharing n-1 facets, and the
// stored edge vectors point from one endpoint to the other.
TEST(Polytope, EdgeConsistency) {
    for (const auto& [name, P] : oracle::test_polytopes()) {
        std::size_t degree_sum = 0;
        for (const auto& e : P.edges()) {
            const auto& a = P.vertices()[e.a];
            const auto& b = P.vertices()[e.b];
            QVector d = b.point - a.point;
            EXPECT_EQ(oracle::primitive_of(d), a.edge_vectors[e.dir_at_a]) << name;
            EXPECT_EQ(oracle::primitive_of(-d), b.edge_vectors[e.dir_at_b]) << name;
        }
        for (std::size_t i = 0; i < P.vertices().size(); ++i) {
            auto mine = P.vertices()[i].edge_vectors;
            auto theirs = oracle::edge_directions(P, i);
            std::sort(mine.begin(), mine.end());
            std::sort(theirs.begin(), theirs.end());
            EXPECT_EQ(mine, theirs) << name;
            degree_sum += mine.size();
        }
        EXPECT_EQ(degree_sum, 2 * P.edges().size()) << name;
    }
}

TEST(Polytope, FaceCodimMatchesBruteForce) {
    for (const auto& [name, P] : oracle::test_polytopes()) {
        oracle::for_each_box_point(P, 1, [&](const IntVector& p) {
            QVector x = oracle::to_q(p);
            int c = oracle::codim(P, x);
            auto mine = face_codim(P, x);
            if (c < 0)
                EXPECT_FALSE(mine) << name;
            else
                EXPECT_EQ(mine.value_or(-1), c) << name;
        });
        for (const auto& f : P.faces())
            EXPECT_EQ(face_codim(P, f.barycenter).value_or(-1), static_cast<int>(f.facets.size())) << name;
    }
}

TEST(Polytope, FaceCounts) {
    // the 3-cube has 8 + 12 + 6 + 1 faces
    EXPECT_EQ(hypercube(3).faces().size(), 27u);
    EXPECT_EQ(dilated_simplex(3).faces().size(), 15u);
}

TEST(PolytopeIO, RoundTrip) {
    Polytope P = polytope_from_file(WPD_TEST_DATA "/square.json");
    EXPECT_EQ(P.vertices().size(), 4u);
    Polytope Q = polytope_from_text(facets_to_text(P.facets()));
    EXPECT_EQ(points(P), points(Q));
    Polytope R = polytope_from_text(R"({"dim": 1, "facets": [[1, "-1/2"], [-1, "-3/2"]]})");
    EXPECT_EQ(R.vertices()[0].point[0], Rational(-1, 2));
}

TEST(PolytopeIO, Errors) {
    try {
        polytope_from_file(WPD_TEST_DATA "/bad_float.json");
        FAIL();
    } catch (const InputError& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("bad_float.json"), std::string::npos) << msg;
        EXPECT_NE(msg.find("facets[1][2]"), std::string::npos) << msg;
    }
    EXPECT_THROW(polytope_from_file(WPD_TEST_DATA "/unbounded.json"), GeometryError);
    EXPECT_THROW(polytope_from_file(WPD_TEST_DATA "/missing.json"), InputError);
    EXPECT_THROW(polytope_from_text("{"), InputError);
    EXPECT_THROW(polytope_from_text(R"({"dim": 2, "facets": [[1, 0]]})"), InputError);
}

TEST(PolytopeIO, Builtins) {
    for (const char* name : {"interval:3", "interval:-1,2", "cube:2", "cube:3,2", "simplex:3", "trapezoid", "prism",
                             "skew-triangle"})
        EXPECT_NO_THROW(builtin_polytope(name)) << name;
    EXPECT_THROW(builtin_polytope("octahedron"), GeometryError);
    EXPECT_EQ(builtin_polytope("simplex:2,3").vertices().size(), 3u);
    EXPECT_EQ(builtin_polytope("cube:3,2").vertices().back().point, q({2, 2, 2}));
    EXPECT_THROW(builtin_polytope("dodecahedron"), InputError);
}
