#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "wpd/polytope.hpp"

namespace wpd {

/// A vector with nonzero pairing against every edge vector of a polytope.
struct PolarizingVector {
    QVector xi;
};

bool is_polarizing(const Polytope& P, const QVector& xi);
// Throws DomainError if xi pairs to zero with some edge vector.
PolarizingVector make_polarizing(const Polytope& P, QVector xi);

// First polarizing vector on the moment curve (1, t, t^2, ..., t^{n-1}) for
// t = seed, seed + 1, ... Each edge vector vanishes at finitely many t, so the
// search terminates.
PolarizingVector find_polarizing(const Polytope& P, std::int64_t seed);

// Uniform random integer vector in [-bound, bound]^n, redrawn until polarizing.
PolarizingVector random_polarizing(const Polytope& P, std::mt19937_64& rng, int bound = 20);

/**
 * Tangent cone at a vertex with its generators polarized: a generator whose
 * pairing with xi is positive is negated ("flipped"), so every generator pairs
 * negatively with xi.
 */
struct PolarizedCone {
    std::size_t vertex = 0; // index into Polytope::vertices()
    QVector apex;
    std::vector<QVector> generators;
    std::vector<bool> flipped;
    int flip_count = 0;
    // Inverse of the matrix whose columns are the generators.
    QMatrix to_coords;

    int sign() const { return flip_count % 2 == 0 ? 1 : -1; }
};

// Builds a cone from explicit data (the generators must be independent).
PolarizedCone make_cone(QVector apex, std::vector<QVector> generators, std::vector<bool> flipped);

// One cone per vertex, in vertex order.
std::vector<PolarizedCone> polarize_cones(const Polytope& P, const PolarizingVector& xi);

// Coordinates m with x = apex + sum m_j generators_j when all m_j >= 0,
// otherwise std::nullopt.
std::optional<QVector> cone_membership(const PolarizedCone& C, const QVector& x);

// Coordinates of x - apex in the generator basis, without the sign test.
QVector cone_coordinates(const PolarizedCone& C, const QVector& x);

} // namespace wpd
