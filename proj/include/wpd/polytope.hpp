#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wpd/rational.hpp"

namespace wpd {

/// Closed half-space { x : <x, normal> >= offset } with inward normal.
struct HalfSpace {
    QVector normal;
    Rational offset;

    Rational slack(const QVector& x) const { return dot(x, normal) - offset; }
    bool contains(const QVector& x) const { return slack(x).sign() >= 0; }
    bool tight(const QVector& x) const { return slack(x).is_zero(); }
};

/// A vertex together with the data that a simple polytope attaches to it.
struct Vertex {
    QVector point;
    // exactly n facet indices, ascending
    std::vector<std::size_t> active_facets;
    // edge_vectors[j] is the primitive integer direction of the edge obtained
    // by relaxing active_facets[j]; it points from the vertex into the polytope
    std::vector<QVector> edge_vectors;
};

/// An edge joining vertices `a` and `b`. `dir_at_a` indexes the edge vector
/// of vertex a pointing toward b, and symmetrically for `dir_at_b`.
struct Edge {
    std::size_t a;
    std::size_t b;
    std::size_t dir_at_a;
    std::size_t dir_at_b;
};

/// A nonempty face, identified by the facets containing it.
struct Face {
    std::vector<std::size_t> facets; // ascending; size = codimension
    std::vector<std::size_t> vertices;
    QVector barycenter;              // average of the vertices, relative interior point
};

/**
 * A bounded, full-dimensional, simple polytope given by half-spaces.
 *
 * Construction validates the input and derives all vertex data once; the
 * object is immutable afterwards.
 */
class Polytope {
  public:
    // Throws GeometryError for unbounded, empty, non-simple or redundant input.
    explicit Polytope(std::vector<HalfSpace> facets);

    std::size_t dim() const { return dim_; }
    const std::vector<HalfSpace>& facets() const { return facets_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool is_simple() const { return true; }
    // Every vertex's edge vectors form a basis of Z^n.
    bool is_regular() const { return regular_; }
    // Every vertex has integer coordinates.
    bool is_integral() const { return integral_; }

    bool contains(const QVector& x) const;
    std::vector<std::size_t> active_facets(const QVector& x) const;

    // Index of the vertex at `point`, if any.
    std::optional<std::size_t> find_vertex(const QVector& point) const;

    // All nonempty faces, vertices first, the polytope itself (no facets) last.
    std::vector<Face> faces() const;

    // Smallest and largest vertex coordinates per axis.
    std::pair<QVector, QVector> bounding_box() const;
    // Integer box [floor(lo), ceil(hi)] per axis.
    std::pair<IntVector, IntVector> integer_box() const;

    // Throws HypothesisError naming the first failing vertex unless the
    // polytope is regular and integral.
    void require_regular_integral(const std::string& operation) const;

  private:
    std::size_t dim_;
    std::vector<HalfSpace> facets_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    bool regular_ = false;
    bool integral_ = false;
};

// Vertices of the polyhedron cut out by `facets`, with active sets and edge
// vectors. Throws GeometryError if the polyhedron is unbounded, empty or has a
// vertex with more than n active facets.
std::vector<Vertex> enumerate_vertices(const std::vector<HalfSpace>& facets);

// Primitive edge directions at v, ordered by the relaxed facet's position in
// v.active_facets.
std::vector<QVector> edge_vectors(const std::vector<HalfSpace>& facets, const Vertex& v);
inline std::vector<QVector> edge_vectors(const Polytope& P, const Vertex& v) {
    return edge_vectors(P.facets(), v);
}

// Codimension of the smallest face containing x, or std::nullopt if x is
// outside P.
std::optional<int> face_codim(const Polytope& P, const QVector& x);

// |det| of the edge-vector matrix at a vertex.
Rational edge_determinant(const Vertex& v);

} // namespace wpd
