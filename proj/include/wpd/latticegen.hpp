#pragma once

#include <map>
#include <string>
#include <vector>

#include "wpd/laurent.hpp"
#include "wpd/polarize.hpp"
#include "wpd/polytope.hpp"
#include "wpd/weights.hpp"

namespace wpd {

struct LatticePoint {
    IntVector p;
    int codim = 0; // c(p), number of facets active at p
};

// All integer points of P (any bounded polytope), in lexicographic order.
std::vector<LatticePoint> lattice_points(const Polytope& P);

/**
 * The weighted lattice-point polynomial sum_p (1/(1+y))^{c(p)} z^p, stored in
 * cleared form: `poly` is (1+y)^n times the sum, so the coefficient of z^p is
 * (1+y)^{n - c(p)}.
 */
struct WeightedLatticeSum {
    std::size_t n = 0;
    LaurentPoly poly;
    std::vector<LatticePoint> points;

    // Coefficient of z^alpha, i.e. (1/(1+y))^{c(alpha)} for alpha in P and 0 otherwise.
    YRational multiplicity(const IntVector& alpha) const;
};

// Requires a regular integral polytope (HypothesisError otherwise).
WeightedLatticeSum weighted_lattice_sum(const Polytope& P);

/// Weighted count sum_p (1/(1+y))^{c(p)} as a polynomial in 1/(1+y):
/// by_codim[c] is the number of lattice points with c(p) = c.
struct WeightedCount {
    std::vector<Integer> by_codim;

    Rational at(const WeightParam& y) const;
    YRational symbolic() const;
    // e.g. "1 + 2/(1+y)"
    std::string str() const;
};

// Require a regular integral polytope.
WeightedCount weighted_count_symbolic(const Polytope& P);
Rational weighted_count(const Polytope& P, const WeightParam& y);

/// Generating function of the vertex cone at `vertex`:
/// z^v prod_j (1 + y z^{a_j}) / ((1+y)(1 - z^{a_j})), with the unpolarized
/// edge vectors a_j.
struct ConeGenFun {
    std::size_t vertex = 0;
    QVector apex;
    RationalFunction ratfun;
};

ConeGenFun cone_genfun(const Polytope& P, std::size_t vertex);

struct BrionCheck {
    RationalFunction lhs;     // sum of all vertex cone generating functions
    WeightedLatticeSum rhs;   // cleared: rhs.poly / (1+y)^n
    bool equal = false;
};

// Sums the vertex generating functions over the least common multiple of
// their binomial denominators and compares with the weighted lattice-point
// polynomial by cross-multiplication.
BrionCheck brion_check(const Polytope& P);

// The same sum, formed with plain common-denominator addition.
RationalFunction sum_cone_genfuns_naive(const Polytope& P);

/// Inclusive integer box.
struct IntBox {
    IntVector lo;
    IntVector hi;

    bool contains(const IntVector& q) const;
    IntBox inflated(std::int64_t by) const;
};

IntBox lattice_box(const Polytope& P);

// For every lattice point q in the box, sum_v (-1)^{#v} w_v(q), where the
// points of each polarized cone are enumerated by their (integer) cone
// coordinates. Zero totals are omitted.
std::map<IntVector, YRational> cone_series_sum(const Polytope& P, const PolarizingVector& xi, const IntBox& box);
std::map<IntVector, Rational> cone_series_sum(const Polytope& P, const PolarizingVector& xi, const IntBox& box,
                                              const WeightParam& y);

struct ChiYEval {
    Rational lhs; // sum of vertex terms at (y, z)
    Rational rhs; // sum_p (1/(1+y))^{c(p)} z^p
    bool equal = false;
};

// Throws DomainError when some z_i = 0 or z^{a} = 1 for an edge vector a.
ChiYEval chi_y_eval(const Polytope& P, const WeightParam& y, const QVector& z);

} // namespace wpd
