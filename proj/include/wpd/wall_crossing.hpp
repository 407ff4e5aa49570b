#pragma once

#include <vector>

#include "wpd/polarize.hpp"
#include "wpd/polytope.hpp"
#include "wpd/ypoly.hpp"

namespace wpd {

/// Two polarizing vectors in adjacent chambers, separated by the single wall
/// normal^perp. Every edge parallel to `normal` changes its flip state.
struct WallCrossing {
    PolarizingVector before;
    PolarizingVector after;
    QVector normal;                 // primitive edge direction, first nonzero entry positive
    std::vector<std::size_t> edges; // indices into Polytope::edges() parallel to normal
};

// Walks the segment from xi0 to xi1 and returns one WallCrossing for every
// parameter at which exactly one wall is crossed. Parameters where several
// walls are crossed at once are skipped.
std::vector<WallCrossing> single_wall_crossings(const Polytope& P, const PolarizingVector& xi0,
                                                const PolarizingVector& xi1);

// Position of x relative to the union of the two cones at an endpoint, a
// cylinder over the edge shared by both endpoints. t_v and t_u are the
// coordinates of x along the edge generator of the cones at v and at u before
// the crossing.
enum class CrossingCase {
    EdgeInFace,  // t_v > 0, t_u < 0: the smallest cone face containing x contains the edge
    EdgeOffFace, // x on the common facet of the two cones at v (t_v = 0, t_u < 0) or at u (t_u = 0, t_v > 0)
    Beyond,      // any other sign pattern: both endpoints see x on the same side of the wall
    NotInvolved, // x is outside the cylinder
};

const char* to_string(CrossingCase c);

/// Contributions (-1)^{#v} w_v(x) of the two endpoints of one flipping edge,
/// before (S) and after (S') the crossing. `v` is the endpoint whose edge
/// vector along the edge goes from negative to positive pairing.
struct EdgeCrossingTerms {
    std::size_t edge = 0;
    std::size_t v = 0;
    std::size_t u = 0;
    YRational S_v, S_v_after, S_u, S_u_after;
    CrossingCase kind = CrossingCase::NotInvolved;
    int t_v = 0, t_u = 0; // signs of the edge coordinates

    bool cancels() const { return (S_v - S_v_after) + (S_u - S_u_after) == YRational(0); }
    // The case-specific shape of the terms: exactly one nonzero term per
    // endpoint when the edge is in the face; S'_v = -y S_v and S_u = 0 when it
    // is not.
    bool matches_case() const;
};

struct WallCrossingCheck {
    std::vector<EdgeCrossingTerms> terms;
    bool others_unchanged = true; // vertices off the flipping edges keep their contribution
    bool ok() const;
};

WallCrossingCheck check_wall_crossing(const Polytope& P, const WallCrossing& crossing, const QVector& x);

} // namespace wpd
