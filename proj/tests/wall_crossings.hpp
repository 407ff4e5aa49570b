#pragma once

#include <random>
#include <vector>

#include "wpd/latticegen.hpp"
#include "wpd/polarize.hpp"
#include "wpd/wall_crossing.hpp"

namespace testing_support {

struct Crossing {
    const wpd::Polytope* P;
    wpd::WallCrossing crossing;
};

// Single-wall crossings along segments between random polarizing vectors.
inline std::vector<Crossing> engineered_crossings(const wpd::Polytope& P, std::mt19937_64& rng, int segments) {
    std::vector<Crossing> out;
    for (int s = 0; s < segments; ++s) {
        auto a = wpd::random_polarizing(P, rng, 6);
        auto b = wpd::random_polarizing(P, rng, 6);
        for (auto& c : wpd::single_wall_crossings(P, a, b))
            out.push_back({&P, std::move(c)});
    }
    return out;
}

// Lattice points near P and the face barycenters.
inline std::vector<wpd::QVector> probe_points(const wpd::Polytope& P) {
    std::vector<wpd::QVector> out;
    auto box = wpd::lattice_box(P).inflated(1);
    wpd::IntVector p = box.lo;
    const std::size_t n = p.size();
    while (true) {
        wpd::QVector q;
        for (auto v : p)
            q.push_back(wpd::Rational(static_cast<long>(v)));
        out.push_back(q);
        std::size_t i = 0;
        while (i < n && p[i] == box.hi[i])
            p[i] = box.lo[i], ++i;
        if (i == n)
            break;
        ++p[i];
    }
    for (const auto& f : P.faces())
        out.push_back(f.barycenter);
    return out;
}

} // namespace testing_support
