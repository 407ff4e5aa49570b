#include "wpd/weights.hpp"

#include "wpd/errors.hpp"

namespace wpd {

WeightParam::WeightParam(Rational y) : y_(std::move(y)) {
    if (y_ == Rational(-1))
        throw DomainError("the weight parameter must satisfy y != -1");
}

Rational ConeWeight::value(const WeightParam& y) const { return y.unflipped().pow(r1) * y.flipped().pow(r2); }

std::optional<ConeWeight> cone_weight_exponents(const PolarizedCone& C, const QVector& x) {
    auto m = cone_membership(C, x);
    if (!m)
        return std::nullopt;
    ConeWeight w;
    for (std::size_t j = 0; j < m->size(); ++j) {
        if (!(*m)[j].is_zero())
            continue;
        if (C.flipped[j])
            ++w.r2;
        else
            ++w.r1;
    }
    return w;
}

Rational cone_weight(const PolarizedCone& C, const QVector& x, const WeightParam& y) {
    auto w = cone_weight_exponents(C, x);
    return w ? w->value(y) : Rational(0);
}

YRational cone_weight_symbolic(const PolarizedCone& C, const QVector& x) {
    auto w = cone_weight_exponents(C, x);
    return w ? w->symbolic() : YRational(0);
}

Rational polytope_weight(const Polytope& P, const QVector& x, const WeightParam& y) {
    auto c = face_codim(P, x);
    return c ? y.unflipped().pow(*c) : Rational(0);
}

YRational polytope_weight_symbolic(const Polytope& P, const QVector& x) {
    auto c = face_codim(P, x);
    return c ? YRational::weight(static_cast<unsigned>(*c), 0) : YRational(0);
}

Rational decomposition_rhs(const std::vector<PolarizedCone>& cones, const QVector& x, const WeightParam& y) {
    Rational sum;
    for (const auto& C : cones)
        if (auto w = cone_weight_exponents(C, x))
            sum += Rational(C.sign()) * w->value(y);
    return sum;
}

YRational decomposition_rhs_symbolic(const std::vector<PolarizedCone>& cones, const QVector& x) {
    // Accumulate sum sign * y^r2 (1+y)^(n - r1 - r2) over the common
    // denominator (1+y)^n, then reduce once.
    const auto n = static_cast<unsigned>(x.size());
    YPoly num;
    for (const auto& C : cones) {
        auto w = cone_weight_exponents(C, x);
        if (!w)
            continue;
        YPoly term = YPoly::y().pow(static_cast<unsigned>(w->r2)) *
                     YPoly::one_plus_y().pow(n - static_cast<unsigned>(w->codim()));
        num += term * Rational(C.sign());
    }
    return YRational(num, YPoly::one_plus_y().pow(n));
}

DecompositionCheck<Rational> check_decomposition(const Polytope& P, const PolarizingVector& xi, const QVector& x,
                                                 const WeightParam& y) {
    auto cones = polarize_cones(P, xi);
    DecompositionCheck<Rational> r{polytope_weight(P, x, y), decomposition_rhs(cones, x, y)};
    r.equal = r.lhs == r.rhs;
    return r;
}

DecompositionCheck<YRational> check_decomposition_symbolic(const Polytope& P,
                                                           const std::vector<PolarizedCone>& cones,
                                                           const QVector& x) {
    DecompositionCheck<YRational> r{polytope_weight_symbolic(P, x), decomposition_rhs_symbolic(cones, x)};
    r.equal = r.lhs == r.rhs;
    return r;
}

DecompositionCheck<YRational> check_decomposition_symbolic(const Polytope& P, const PolarizingVector& xi,
                                                           const QVector& x) {
    return check_decomposition_symbolic(P, polarize_cones(P, xi), x);
}

std::vector<SamplePoint> sample_points(const Polytope& P, const PolarizingVector& xi, std::mt19937_64& rng,
                                       int random_count) {
    std::vector<SamplePoint> pts;
    for (const auto& f : P.faces()) {
        const char* kind = f.facets.size() == P.dim() ? "vertex" : (f.facets.empty() ? "interior" : "face");
        pts.push_back({f.barycenter, kind});
    }
    for (const auto& v : P.vertices()) {
        pts.push_back({v.point + xi.xi, "probe"});
        pts.push_back({v.point - xi.xi, "probe"});
    }
    auto [lo, hi] = P.bounding_box();
    const std::size_t n = P.dim();
    // random points p = center + (t - 1/2) * 2 * (hi - lo), t in [0, 1] with denominator 64
    std::uniform_int_distribution<int> num(0, 64);
    for (int k = 0; k < random_count; ++k) {
        QVector x(n);
        for (std::size_t i = 0; i < n; ++i) {
            Rational center = (lo[i] + hi[i]) * Rational(1, 2);
            Rational t(num(rng), 64);
            x[i] = center + (t - Rational(1, 2)) * Rational(2) * (hi[i] - lo[i]);
        }
        pts.push_back({std::move(x), "random"});
    }
    return pts;
}

} // namespace wpd
