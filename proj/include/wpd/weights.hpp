#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wpd/polarize.hpp"
#include "wpd/polytope.hpp"
#include "wpd/ypoly.hpp"

namespace wpd {

/// The deformation parameter y. Any rational except -1.
class WeightParam {
  public:
    // Throws DomainError for y = -1.
    explicit WeightParam(Rational y);

    const Rational& y() const { return y_; }
    // 1/(1+y), weight of a vanishing unflipped coordinate
    Rational unflipped() const { return (Rational(1) + y_).inverse(); }
    // y/(1+y), weight of a vanishing flipped coordinate
    Rational flipped() const { return y_ / (Rational(1) + y_); }

  private:
    Rational y_;
};

/// Exponents of a cone weight (1/(1+y))^r1 (y/(1+y))^r2: r1 counts vanishing
/// unflipped cone coordinates, r2 vanishing flipped ones.
struct ConeWeight {
    int r1 = 0;
    int r2 = 0;

    int codim() const { return r1 + r2; }
    Rational value(const WeightParam& y) const;
    YRational symbolic() const { return YRational::weight(static_cast<unsigned>(r1), static_cast<unsigned>(r2)); }
};

// std::nullopt when x is outside the cone.
std::optional<ConeWeight> cone_weight_exponents(const PolarizedCone& C, const QVector& x);

Rational cone_weight(const PolarizedCone& C, const QVector& x, const WeightParam& y);
YRational cone_weight_symbolic(const PolarizedCone& C, const QVector& x);

// (1/(1+y))^c(x) on the polytope, 0 outside.
Rational polytope_weight(const Polytope& P, const QVector& x, const WeightParam& y);
YRational polytope_weight_symbolic(const Polytope& P, const QVector& x);

template <typename Value>
struct DecompositionCheck {
    Value lhs;   // weighted indicator of the polytope
    Value rhs;   // signed sum of weighted cone indicators
    bool equal = false;
};

// sum over vertices of (-1)^{#v} times the cone weight at x
Rational decomposition_rhs(const std::vector<PolarizedCone>& cones, const QVector& x, const WeightParam& y);
YRational decomposition_rhs_symbolic(const std::vector<PolarizedCone>& cones, const QVector& x);

DecompositionCheck<Rational> check_decomposition(const Polytope& P, const PolarizingVector& xi, const QVector& x,
                                                 const WeightParam& y);
DecompositionCheck<YRational> check_decomposition_symbolic(const Polytope& P, const PolarizingVector& xi,
                                                           const QVector& x);
DecompositionCheck<YRational> check_decomposition_symbolic(const Polytope& P,
                                                           const std::vector<PolarizedCone>& cones,
                                                           const QVector& x);

struct SamplePoint {
    QVector x;
    std::string kind; // "vertex", "face", "interior", "probe", "random"
};

// Face representatives (barycenter of every face, including each vertex and
// the interior), probes v +- xi beyond every vertex, and `random_count`
// random rational points in the bounding box inflated 2x about its center.
std::vector<SamplePoint> sample_points(const Polytope& P, const PolarizingVector& xi, std::mt19937_64& rng,
                                       int random_count = 20);

} // namespace wpd
