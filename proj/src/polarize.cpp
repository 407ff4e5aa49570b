#include "wpd/polarize.hpp"

#include <algorithm>

#include "wpd/errors.hpp"
#include "wpd/linalg.hpp"

namespace wpd {

bool is_polarizing(const Polytope& P, const QVector& xi) {
    if (xi.size() != P.dim())
        return false;
    for (const auto& v : P.vertices())
        for (const auto& a : v.edge_vectors)
            if (dot(a, xi).is_zero())
                return false;
    return true;
}

PolarizingVector make_polarizing(const Polytope& P, QVector xi) {
    if (xi.size() != P.dim())
        throw DomainError("polarizing vector has length " + std::to_string(xi.size()) + ", expected " +
                          std::to_string(P.dim()));
    for (const auto& v : P.vertices())
        for (const auto& a : v.edge_vectors)
            if (dot(a, xi).is_zero())
                throw DomainError(str(xi) + " is not polarizing: orthogonal to edge vector " + str(a) +
                                  " at vertex " + str(v.point));
    return {std::move(xi)};
}

PolarizingVector find_polarizing(const Polytope& P, std::int64_t seed) {
    for (std::int64_t t = seed;; ++t) {
        QVector xi(P.dim());
        Rational power = 1;
        for (auto& x : xi) {
            x = power;
            power *= Rational(static_cast<long>(t));
        }
        if (is_polarizing(P, xi))
            return {std::move(xi)};
    }
}

PolarizingVector random_polarizing(const Polytope& P, std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> coord(-bound, bound);
    while (true) {
        QVector xi(P.dim());
        for (auto& x : xi)
            x = coord(rng);
        if (is_polarizing(P, xi))
            return {std::move(xi)};
    }
}

PolarizedCone make_cone(QVector apex, std::vector<QVector> generators, std::vector<bool> flipped) {
    PolarizedCone C;
    C.apex = std::move(apex);
    C.generators = std::move(generators);
    C.flipped = std::move(flipped);
    C.flip_count = static_cast<int>(std::count(C.flipped.begin(), C.flipped.end(), true));
    auto inv = inverse(transpose(C.generators));
    if (!inv)
        throw GeometryError("cone generators at " + str(C.apex) + " are linearly dependent");
    C.to_coords = std::move(*inv);
    return C;
}

std::vector<PolarizedCone> polarize_cones(const Polytope& P, const PolarizingVector& xi) {
    std::vector<PolarizedCone> cones;
    cones.reserve(P.vertices().size());
    for (std::size_t i = 0; i < P.vertices().size(); ++i) {
        const auto& v = P.vertices()[i];
        std::vector<QVector> gens;
        std::vector<bool> flipped;
        for (const auto& a : v.edge_vectors) {
            int s = dot(a, xi.xi).sign();
            if (s == 0)
                throw DomainError(str(xi.xi) + " is not polarizing: orthogonal to edge vector " + str(a) +
                                  " at vertex " + str(v.point));
            flipped.push_back(s > 0);
            gens.push_back(s > 0 ? -a : a);
        }
        PolarizedCone C = make_cone(v.point, std::move(gens), std::move(flipped));
        C.vertex = i;
        cones.push_back(std::move(C));
    }
    return cones;
}

QVector cone_coordinates(const PolarizedCone& C, const QVector& x) { return multiply(C.to_coords, x - C.apex); }

std::optional<QVector> cone_membership(const PolarizedCone& C, const QVector& x) {
    QVector m = cone_coordinates(C, x);
    if (std::any_of(m.begin(), m.end(), [](const Rational& r) { return r.sign() < 0; }))
        return std::nullopt;
    return m;
}

} // namespace wpd
