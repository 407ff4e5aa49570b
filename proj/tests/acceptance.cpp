// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "wall_crossings.hpp"
#include "wpd/errors.hpp"
#include "wpd/latticegen.hpp"
#include "wpd/polarize.hpp"
#include "wpd/series.hpp"
#include "wpd/weights.hpp"

using namespace wpd;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string cli_output(std::vector<std::string> args, int* code = nullptr) {
    args.insert(args.begin(), "wpd");
    std::ostringstream out, err;
    int c = cli::run(args, out, err);
    if (code)
        *code = c;
    return out.str() + err.str();
}

// Face barycenters, the apex probes v +- xi and a few random points.
std::vector<QVector> decomposition_points(const Polytope& P, std::mt19937_64& rng) {
    std::vector<QVector> out;
    for (const auto& s : sample_points(P, find_polarizing(P, 2), rng, 8))
        out.push_back(s.x);
    for (std::int64_t seed = 1; seed <= 5; ++seed) {
        auto xi = find_polarizing(P, seed).xi;
        for (const auto& v : P.vertices()) {
            out.push_back(v.point + xi);
            out.push_back(v.point - xi);
        }
    }
    return out;
}

Outcome todd_series_criterion() {
    Outcome o;
    std::string text = cli_output({"series", "--order", "4"});
    o.require(text.find("Todd: 1, 1/2, 1/12, 0, -1/720\n") != std::string::npos, "series --order 4 output");
    for (const auto& c : verify_identities(12))
        o.require(c.holds, c.name);
    o.require(todd_series(12).coeffs() == oracle::todd_coeffs(12), "Todd vs Bernoulli oracle");
    o.require(lhat_series(12).coeffs() == oracle::lhat_coeffs(12), "Lhat vs Bernoulli oracle");
    return o;
}

Outcome decomposition_criterion(std::size_t& polytopes, std::size_t& checks) {
    Outcome o;
    std::mt19937_64 rng(1);
    for (const auto& [name, P] : oracle::test_polytopes()) {
        ++polytopes;
        auto pts = decomposition_points(P, rng);
        for (std::int64_t seed = 1; seed <= 5; ++seed) {
            auto cones = polarize_cones(P, find_polarizing(P, seed));
            for (const auto& x : pts) {
                ++checks;
                o.require(decomposition_rhs_symbolic(cones, x) == oracle::weighted_indicator(P, x),
                          name + " seed " + std::to_string(seed) + " at " + str(x));
            }
        }
    }
    return o;
}

Outcome independence_criterion() {
    Outcome o;
    std::mt19937_64 rng(2);
    for (const auto& [name, P] : oracle::test_polytopes()) {
        auto pts = decomposition_points(P, rng);
        std::vector<std::vector<PolarizedCone>> chambers;
        for (std::int64_t seed = 1; seed <= 5; ++seed)
            chambers.push_back(polarize_cones(P, find_polarizing(P, seed)));
        for (int r = 0; r < 5; ++r)
            chambers.push_back(polarize_cones(P, random_polarizing(P, rng)));
        for (const auto& x : pts)
            for (std::size_t a = 0; a < chambers.size(); ++a)
                for (std::size_t b = a + 1; b < chambers.size(); ++b)
                    o.require(decomposition_rhs_symbolic(chambers[a], x) == decomposition_rhs_symbolic(chambers[b], x),
                              name + " at " + str(x));
    }
    return o;
}

Outcome brion_criterion() {
    Outcome o;
    std::vector<oracle::Named> list;
    for (long d = 1; d <= 4; ++d)
        list.push_back({"interval:" + std::to_string(d), interval(0, d)});
    list.push_back({"cube:2", hypercube(2)});
    list.push_back({"cube:3", hypercube(3)});
    for (long d = 1; d <= 3; ++d)
        list.push_back({"simplex:2," + std::to_string(d), dilated_simplex(2, d)});
    list.push_back({"trapezoid", trapezoid()});
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<long> num(2, 9), den(1, 4);
    for (const auto& [name, P] : list) {
        auto r = brion_check(P);
        o.require(r.equal, name + ": brion_check");
        // the exact identity must also agree with the naive oracle at sample points
        for (int t = 0; t < 5; ++t) {
            QVector z;
            for (std::size_t i = 0; i < P.dim(); ++i)
                z.push_back(Rational(num(rng), den(rng)));
            Rational y(num(rng), den(rng));
            try {
                o.require(r.lhs.eval(z, y) == oracle::lattice_sum(P, y, z), name + ": lhs at " + str(z));
            } catch (const DomainError&) {
            }
        }
        IntBox box = lattice_box(P).inflated(2);
        for (std::int64_t seed : {2, 3}) {
            auto sum = cone_series_sum(P, find_polarizing(P, seed), box);
            oracle::for_each_box_point(P, 2, [&](const IntVector& p) {
                YRational expect = oracle::weighted_indicator(P, oracle::to_q(p));
                auto it = sum.find(p);
                o.require((it == sum.end() ? YRational(0) : it->second) == expect,
                          name + ": cone series at " + str(p));
            });
        }
    }
    return o;
}

Outcome chi_y_criterion() {
    Outcome o;
    auto polys = oracle::test_polytopes();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    std::uniform_int_distribution<std::size_t> pick(0, polys.size() - 1);
    int draws = 0;
    while (draws < 100) {
        const auto& [name, P] = polys[pick(rng)];
        Rational y(num(rng), den(rng));
        QVector z;
        for (std::size_t i = 0; i < P.dim(); ++i)
            z.push_back(Rational(num(rng), den(rng)));
        bool pole = y == Rational(-1) || std::any_of(z.begin(), z.end(), [](const Rational& r) { return r.is_zero(); });
        for (std::size_t i = 0; i < P.vertices().size() && !pole; ++i)
            for (const auto& a : oracle::edge_directions(P, i))
                pole = pole || oracle::power(z, a) == Rational(1);
        if (pole)
            continue;
        auto r = chi_y_eval(P, WeightParam(y), z);
        o.require(r.equal && r.lhs == oracle::vertex_sum(P, y, z) && r.rhs == oracle::lattice_sum(P, y, z),
                  name + " y=" + y.str() + " z=" + str(z));
        ++draws;
    }
    std::uniform_int_distribution<long> off(-4, 4);
    for (const auto& [name, P] : polys) {
        auto W = weighted_lattice_sum(P);
        for (const auto& [p, c] : oracle::lattice_points(P))
            o.require(W.multiplicity(p) == YRational::weight(static_cast<unsigned>(c), 0), name + " at " + str(p));
        IntBox box = lattice_box(P);
        int probes = 0;
        while (probes < 20) {
            IntVector q = box.lo;
            for (std::size_t i = 0; i < q.size(); ++i)
                q[i] += off(rng) + (box.hi[i] - box.lo[i]) / 2;
            if (oracle::codim(P, oracle::to_q(q)) >= 0)
                continue;
            o.require(W.multiplicity(q).is_zero(), name + " exterior " + str(q));
            ++probes;
        }
    }
    return o;
}

Outcome specialization_criterion() {
    Outcome o;
    for (const auto& [name, P] : oracle::test_polytopes()) {
        o.require(weighted_count(P, WeightParam(0)) == Rational(static_cast<long>(oracle::lattice_points(P).size())),
                  name + " y=0");
        o.require(weighted_count(P, WeightParam(1)) == oracle::weighted_count(P, 1), name + " y=1");
    }
    for (long d = 1; d <= 5; ++d)
        o.require(weighted_count(dilated_simplex(2, d), WeightParam(0)) == Rational((d + 1) * (d + 2) / 2),
                  "triangle d=" + std::to_string(d));
    return o;
}

Outcome wall_crossing_criterion(int& crossings, int& in_face, int& off_face) {
    Outcome o;
    std::mt19937_64 rng(7);
    for (const auto& [name, P] : oracle::test_polytopes()) {
        auto pts = testing_support::probe_points(P);
        for (const auto& c : testing_support::engineered_crossings(P, rng, 2)) {
            ++crossings;
            for (const auto& x : pts) {
                auto r = check_wall_crossing(P, c.crossing, x);
                o.require(r.ok(), name + " crossing at " + str(x));
                for (const auto& t : r.terms) {
                    o.require(t.matches_case(), name + " case " + to_string(t.kind) + " at " + str(x));
                    in_face += t.kind == CrossingCase::EdgeInFace;
                    off_face += t.kind == CrossingCase::EdgeOffFace;
                }
            }
        }
    }
    o.require(crossings >= 10, "fewer than 10 crossings");
    o.require(in_face > 0 && off_face > 0, "both cases exercised");
    return o;
}

template <typename E>
bool throws(const std::function<void()>& f, const std::string& needle = "") {
    try {
        f();
    } catch (const E& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    } catch (...) {
        return false;
    }
    return false;
}

Outcome negative_controls_criterion() {
    Outcome o;
    o.require(throws<GeometryError>([] { Polytope P(octahedron_facets()); }, "not simple"), "octahedron");
    const Polytope T = skew_triangle();
    const std::string hyp = "requires a regular integral polytope";
    o.require(throws<HypothesisError>([&] { weighted_lattice_sum(T); }, hyp), "lattice sum");
    o.require(throws<HypothesisError>([&] { brion_check(T); }, hyp), "brion");
    o.require(throws<HypothesisError>([&] { chi_y_eval(T, WeightParam(1), {Rational(2), Rational(3)}); }, hyp), "chi");
    o.require(throws<HypothesisError>([&] { weighted_count(T, WeightParam(1)); }, hyp), "count");
    o.require(throws<DomainError>([] { WeightParam(-1); }), "WeightParam(-1)");
    o.require(throws<DomainError>([] { hirzebruch_series(-1, 4); }), "series at -1");
    o.require(throws<DomainError>([] { YRational::weight(1, 0).eval(-1); }), "weight at -1");
    int code = 0;
    cli_output({"vertices", "--builtin", "octahedron"}, &code);
    o.require(code == cli::kInputError, "cli octahedron");
    cli_output({"count", "--builtin", "skew-triangle"}, &code);
    o.require(code == cli::kInputError, "cli skew");
    for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
             {"decompose", "--builtin", "cube:2", "--y", "-1"},
             {"count", "--builtin", "cube:2", "--y", "-1"},
             {"chi", "--builtin", "cube:2", "--y", "-1", "--z", "2,3"},
             {"series", "--y", "-1"},
             {"svg", "--builtin", "cube:2", "--y", "-1"}}) {
        std::string text = cli_output(args, &code);
        o.require(code == cli::kInputError && text.find("y != -1") != std::string::npos, "cli " + args[0] + " y=-1");
    }
    return o;
}

} // namespace

int main() {
    bool all = true;
    auto report = [&](int id, const std::string& title, double limit, const std::function<Outcome()>& f) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = f();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > limit) {
            o.pass = false;
            o.detail = "too slow";
        }
        all = all && o.pass;
        std::cout << "criterion " << id << " [" << title << "]: " << (o.pass ? "PASS" : "FAIL") << " ("
                  << std::fixed << std::setprecision(3) << secs << " s)";
        if (!o.pass)
            std::cout << " first failure: " << o.detail;
        std::cout << std::endl;
    };

    report(1, "Todd coefficients and series identities", 1, todd_series_criterion);
    std::size_t polytopes = 0, checks = 0;
    report(2, "weighted polar decomposition", 30, [&] {
        Outcome o = decomposition_criterion(polytopes, checks);
        o.require(polytopes >= 8, "fewer than 8 polytopes");
        return o;
    });
    report(3, "polarization independence", 30, independence_criterion);
    report(4, "vertex generating functions sum to the weighted lattice polynomial", 120, brion_criterion);
    report(5, "chi_y evaluation and coefficient extraction", 60, chi_y_criterion);
    report(6, "specializations y = 0 and y = 1", 30, specialization_criterion);
    int crossings = 0, in_face = 0, off_face = 0;
    report(7, "wall-crossing cancellation", 60, [&] { return wall_crossing_criterion(crossings, in_face, off_face); });
    report(8, "negative controls", 10, negative_controls_criterion);
    std::cout << "summary: " << polytopes << " polytopes, " << checks << " decomposition checks, " << crossings
              << " wall crossings (" << in_face << " edge-in-face, " << off_face << " edge-off-face terms)\n";
    std::cout << (all ? "ALL PASS" : "SOME FAILED") << std::endl;
    return all ? 0 : 1;
}
