#include "wpd/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "wpd/errors.hpp"
#include "wpd/linalg.hpp"

namespace wpd {

namespace {

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

QMatrix normal_matrix(const std::vector<HalfSpace>& facets, const std::vector<std::size_t>& rows) {
    QMatrix A;
    A.reserve(rows.size());
    for (auto r : rows)
        A.push_back(facets[r].normal);
    return A;
}

void check_dimensions(const std::vector<HalfSpace>& facets) {
    if (facets.empty())
        throw GeometryError("polytope needs at least one facet");
    const std::size_t n = facets.front().normal.size();
    if (n == 0)
        throw GeometryError("ambient dimension must be positive");
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (facets[i].normal.size() != n)
            throw GeometryError("facet " + std::to_string(i) + " has a normal of length " +
                                std::to_string(facets[i].normal.size()) + ", expected " + std::to_string(n));
        if (std::all_of(facets[i].normal.begin(), facets[i].normal.end(),
                        [](const Rational& x) { return x.is_zero(); }))
            throw GeometryError("facet " + std::to_string(i) + " has a zero normal");
    }
}

// The recession cone {d : <d, u_i> >= 0} is {0} iff the normals have full rank
// and no extreme-ray candidate (a line cut out by n-1 independent tight
// constraints) satisfies all constraints.
void check_bounded(const std::vector<HalfSpace>& facets) {
    const std::size_t n = facets.front().normal.size();
    QMatrix all = normal_matrix(facets, [&] {
        std::vector<std::size_t> r(facets.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = i;
        return r;
    }());
    if (rank(all) < n)
        throw GeometryError("polyhedron is unbounded: it contains a line");
    for_each_subset(facets.size(), n - 1, [&](const std::vector<std::size_t>& rows) {
        QMatrix A = normal_matrix(facets, rows);
        auto ns = nullspace(A, n);
        if (ns.size() != 1)
            return;
        for (int s : {1, -1}) {
            QVector d = Rational(s) * ns.front();
            bool recedes = std::all_of(facets.begin(), facets.end(),
                                       [&](const HalfSpace& h) { return dot(d, h.normal).sign() >= 0; });
            if (recedes)
                throw GeometryError("polyhedron is unbounded in direction " + str(d));
        }
    });
}

} // namespace

std::vector<QVector> edge_vectors(const std::vector<HalfSpace>& facets, const Vertex& v) {
    const std::size_t n = v.active_facets.size();
    QMatrix A = normal_matrix(facets, v.active_facets);
    std::vector<QVector> result;
    result.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        // keep every other active facet tight, move off facet j into the polytope
        QVector rhs(n);
        rhs[j] = 1;
        auto d = solve_linear(A, rhs);
        if (!d)
            throw GeometryError("active normals at " + str(v.point) + " are linearly dependent");
        auto prim = primitive(*d);
        QVector e;
        e.reserve(n);
        for (const auto& x : prim)
            e.emplace_back(x);
        result.push_back(std::move(e));
    }
    return result;
}

std::vector<Vertex> enumerate_vertices(const std::vector<HalfSpace>& facets) {
    check_dimensions(facets);
    check_bounded(facets);
    const std::size_t n = facets.front().normal.size();

    std::map<QVector, std::vector<std::size_t>> found;
    for_each_subset(facets.size(), n, [&](const std::vector<std::size_t>& rows) {
        QMatrix A = normal_matrix(facets, rows);
        QVector b;
        for (auto r : rows)
            b.push_back(facets[r].offset);
        auto x = solve_linear(A, b);
        if (!x)
            return;
        for (const auto& h : facets)
            if (!h.contains(*x))
                return;
        found.try_emplace(*x, rows);
    });
    if (found.empty())
        throw GeometryError("polyhedron is empty");

    std::vector<Vertex> vertices;
    for (const auto& [point, rows] : found) {
        Vertex v;
        v.point = point;
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (facets[i].tight(point))
                v.active_facets.push_back(i);
        if (v.active_facets.size() != n)
            throw GeometryError("polytope is not simple: vertex " + str(point) + " has " +
                                std::to_string(v.active_facets.size()) + " active facets (expected " +
                                std::to_string(n) + ")");
        v.edge_vectors = edge_vectors(facets, v);
        vertices.push_back(std::move(v));
    }
    return vertices;
}

Polytope::Polytope(std::vector<HalfSpace> facets) : facets_(std::move(facets)) {
    vertices_ = enumerate_vertices(facets_);
    dim_ = facets_.front().normal.size();

    if (facets_.size() <= dim_)
        throw GeometryError("a bounded polytope needs more than n facets");
    std::vector<std::size_t> incidence(facets_.size(), 0);
    for (const auto& v : vertices_)
        for (auto f : v.active_facets)
            ++incidence[f];
    for (std::size_t i = 0; i < facets_.size(); ++i)
        if (incidence[i] < dim_)
            throw GeometryError("facet " + std::to_string(i) + " is redundant (touches " +
                                std::to_string(incidence[i]) + " vertices)");

    // Edges: relaxing active facet j at vertex a leads to the unique vertex b
    // sharing the remaining n-1 facets.
    for (std::size_t a = 0; a < vertices_.size(); ++a) {
        const auto& va = vertices_[a];
        for (std::size_t j = 0; j < dim_; ++j) {
            std::vector<std::size_t> keep;
            for (std::size_t k = 0; k < dim_; ++k)
                if (k != j)
                    keep.push_back(va.active_facets[k]);
            for (std::size_t b = a + 1; b < vertices_.size(); ++b) {
                const auto& vb = vertices_[b];
                if (!std::includes(vb.active_facets.begin(), vb.active_facets.end(), keep.begin(), keep.end()))
                    continue;
                std::size_t jb = 0;
                while (std::binary_search(keep.begin(), keep.end(), vb.active_facets[jb]))
                    ++jb;
                edges_.push_back({a, b, j, jb});
            }
        }
    }

    integral_ = std::all_of(vertices_.begin(), vertices_.end(),
                            [](const Vertex& v) { return wpd::is_integral(v.point); });
    regular_ = std::all_of(vertices_.begin(), vertices_.end(),
                           [](const Vertex& v) { return edge_determinant(v) == Rational(1); });
}

bool Polytope::contains(const QVector& x) const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const HalfSpace& h) { return h.contains(x); });
}

std::vector<std::size_t> Polytope::active_facets(const QVector& x) const {
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < facets_.size(); ++i)
        if (facets_[i].tight(x))
            r.push_back(i);
    return r;
}

std::optional<std::size_t> Polytope::find_vertex(const QVector& point) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].point == point)
            return i;
    return std::nullopt;
}

std::vector<Face> Polytope::faces() const {
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> keys;
    for (const auto& v : vertices_) {
        for (std::size_t k = dim_ + 1; k-- > 0;) {
            for_each_subset(dim_, k, [&](const std::vector<std::size_t>& pick) {
                std::vector<std::size_t> s;
                for (auto p : pick)
                    s.push_back(v.active_facets[p]);
                if (seen.insert(s).second)
                    keys.push_back(s);
            });
        }
    }
    std::stable_sort(keys.begin(), keys.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<Face> faces;
    faces.reserve(keys.size());
    for (auto& s : keys) {
        Face f;
        f.facets = s;
        f.barycenter = QVector(dim_);
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            const auto& act = vertices_[i].active_facets;
            if (std::includes(act.begin(), act.end(), s.begin(), s.end())) {
                f.vertices.push_back(i);
                f.barycenter = f.barycenter + vertices_[i].point;
            }
        }
        f.barycenter = Rational(1, static_cast<long>(f.vertices.size())) * f.barycenter;
        faces.push_back(std::move(f));
    }
    return faces;
}

std::pair<QVector, QVector> Polytope::bounding_box() const {
    QVector lo = vertices_.front().point, hi = lo;
    for (const auto& v : vertices_) {
        for (std::size_t i = 0; i < dim_; ++i) {
            lo[i] = std::min(lo[i], v.point[i]);
            hi[i] = std::max(hi[i], v.point[i]);
        }
    }
    return {lo, hi};
}

std::pair<IntVector, IntVector> Polytope::integer_box() const {
    auto [lo, hi] = bounding_box();
    IntVector ilo(dim_), ihi(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Integer f, c;
        mpz_fdiv_q(f.get_mpz_t(), lo[i].num().get_mpz_t(), lo[i].den().get_mpz_t());
        mpz_cdiv_q(c.get_mpz_t(), hi[i].num().get_mpz_t(), hi[i].den().get_mpz_t());
        ilo[i] = f.get_si();
        ihi[i] = c.get_si();
    }
    return {ilo, ihi};
}

void Polytope::require_regular_integral(const std::string& operation) const {
    for (const auto& v : vertices_) {
        if (!wpd::is_integral(v.point))
            throw HypothesisError(operation + " requires a regular integral polytope: vertex " + str(v.point) +
                                  " is not a lattice point");
        Rational det = edge_determinant(v);
        if (det != Rational(1))
            throw HypothesisError(operation + " requires a regular integral polytope: edge vectors at vertex " +
                                  str(v.point) + " have |det| = " + det.str() + ", not a basis of Z^n");
    }
}

std::optional<int> face_codim(const Polytope& P, const QVector& x) {
    int active = 0;
    for (const auto& h : P.facets()) {
        int s = h.slack(x).sign();
        if (s < 0)
            return std::nullopt;
        active += (s == 0);
    }
    return active;
}

Rational edge_determinant(const Vertex& v) { return determinant(transpose(v.edge_vectors)).abs(); }

} // namespace wpd
