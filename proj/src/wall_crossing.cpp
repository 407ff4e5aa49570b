#include "wpd/wall_crossing.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "wpd/linalg.hpp"
#include "wpd/weights.hpp"

namespace wpd {

namespace {

// Primitive direction with its first nonzero entry positive; parallel edges
// share a wall.
QVector wall_key(const QVector& edge) {
    QVector k = edge;
    auto first = std::find_if(k.begin(), k.end(), [](const Rational& r) { return !r.is_zero(); });
    if (first != k.end() && first->sign() < 0)
        k = -k;
    return k;
}

QVector lerp(const QVector& a, const QVector& b, const Rational& t) {
    return (Rational(1) - t) * a + t * b;
}

} // namespace

const char* to_string(CrossingCase c) {
    switch (c) {
    case CrossingCase::EdgeInFace:
        return "edge-in-face";
    case CrossingCase::EdgeOffFace:
        return "edge-off-face";
    case CrossingCase::Beyond:
        return "beyond-endpoint";
    case CrossingCase::NotInvolved:
        return "not-involved";
    }
    return "?";
}

std::vector<WallCrossing> single_wall_crossings(const Polytope& P, const PolarizingVector& xi0,
                                                const PolarizingVector& xi1) {
    std::map<QVector, std::vector<std::size_t>> walls;
    for (std::size_t i = 0; i < P.edges().size(); ++i) {
        const auto& e = P.edges()[i];
        walls[wall_key(P.vertices()[e.a].edge_vectors[e.dir_at_a])].push_back(i);
    }

    // crossing parameter -> walls crossed there
    std::map<Rational, std::vector<QVector>> events;
    for (const auto& [normal, edges] : walls) {
        Rational a0 = dot(normal, xi0.xi), a1 = dot(normal, xi1.xi);
        if (a0.sign() == a1.sign())
            continue;
        events[a0 / (a0 - a1)].push_back(normal);
    }

    std::vector<Rational> params{Rational(0)};
    for (const auto& [t, ws] : events)
        params.push_back(t);
    params.push_back(Rational(1));

    std::vector<WallCrossing> out;
    std::size_t k = 1;
    for (const auto& [t, ws] : events) {
        if (ws.size() == 1) {
            WallCrossing c;
            c.before.xi = lerp(xi0.xi, xi1.xi, (params[k - 1] + t) * Rational(1, 2));
            c.after.xi = lerp(xi0.xi, xi1.xi, (t + params[k + 1]) * Rational(1, 2));
            c.normal = ws.front();
            c.edges = walls[ws.front()];
            out.push_back(std::move(c));
        }
        ++k;
    }
    return out;
}

namespace {

// Contributions of one endpoint before and after, given the sign of its edge
// coordinate: positive keeps x only before, negative only after, zero moves x
// from the unflipped to the flipped facet.
bool endpoint_pattern(int t, const YRational& before, const YRational& after) {
    const YRational y(YPoly::y());
    if (t > 0)
        return !before.is_zero() && after.is_zero();
    if (t < 0)
        return before.is_zero() && !after.is_zero();
    return !before.is_zero() && after == -(y * before);
}

} // namespace

bool EdgeCrossingTerms::matches_case() const {
    if (kind == CrossingCase::NotInvolved)
        return S_v.is_zero() && S_v_after.is_zero() && S_u.is_zero() && S_u_after.is_zero();
    // at u the edge generator before the crossing is the flipped one, so the roles swap
    if (!endpoint_pattern(t_v, S_v, S_v_after) || !endpoint_pattern(-t_u, S_u_after, S_u))
        return false;
    switch (kind) {
    case CrossingCase::EdgeInFace:
        return S_u_after == S_v;
    case CrossingCase::EdgeOffFace:
        return t_v == 0 ? S_u_after == S_v - S_v_after : S_v == S_u_after - S_u;
    default:
        return true;
    }
}

bool WallCrossingCheck::ok() const {
    return others_unchanged &&
           std::all_of(terms.begin(), terms.end(), [](const EdgeCrossingTerms& t) { return t.cancels(); });
}

WallCrossingCheck check_wall_crossing(const Polytope& P, const WallCrossing& crossing, const QVector& x) {
    auto before = polarize_cones(P, crossing.before);
    auto after = polarize_cones(P, crossing.after);
    auto contribution = [&](const PolarizedCone& C) {
        return YRational(Rational(C.sign())) * cone_weight_symbolic(C, x);
    };

    WallCrossingCheck result;
    std::set<std::size_t> on_edge;
    for (auto ei : crossing.edges) {
        const Edge& e = P.edges()[ei];
        const QVector& at_a = P.vertices()[e.a].edge_vectors[e.dir_at_a];
        bool a_is_v = dot(at_a, crossing.before.xi).sign() < 0;
        EdgeCrossingTerms t;
        t.edge = ei;
        t.v = a_is_v ? e.a : e.b;
        t.u = a_is_v ? e.b : e.a;
        std::size_t dir_v = a_is_v ? e.dir_at_a : e.dir_at_b;
        on_edge.insert(t.v);
        on_edge.insert(t.u);
        t.S_v = contribution(before[t.v]);
        t.S_v_after = contribution(after[t.v]);
        t.S_u = contribution(before[t.u]);
        t.S_u_after = contribution(after[t.u]);

        QVector m = cone_coordinates(before[t.v], x);
        bool in_union = true;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (j != dir_v && m[j].sign() < 0)
                in_union = false;
        std::size_t dir_u = a_is_v ? e.dir_at_b : e.dir_at_a;
        t.t_v = m[dir_v].sign();
        t.t_u = cone_coordinates(before[t.u], x)[dir_u].sign();
        if (!in_union)
            t.kind = CrossingCase::NotInvolved;
        else if (t.t_v > 0 && t.t_u < 0)
            t.kind = CrossingCase::EdgeInFace;
        else if ((t.t_v == 0 && t.t_u < 0) || (t.t_u == 0 && t.t_v > 0))
            t.kind = CrossingCase::EdgeOffFace;
        else
            t.kind = CrossingCase::Beyond;
        result.terms.push_back(std::move(t));
    }
    for (std::size_t i = 0; i < before.size(); ++i)
        if (!on_edge.count(i) && !(contribution(before[i]) == contribution(after[i])))
            result.others_unchanged = false;
    return result;
}

} // namespace wpd
