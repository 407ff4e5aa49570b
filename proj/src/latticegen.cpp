#include "wpd/latticegen.hpp"

#include <algorithm>
#include <functional>

#include "wpd/errors.hpp"
#include "wpd/linalg.hpp"

namespace wpd {

namespace {

// Calls f(q) for every integer q with lo <= q <= hi, lexicographically.
void for_each_in_box(const IntVector& lo, const IntVector& hi, const std::function<void(const IntVector&)>& f) {
    const std::size_t n = lo.size();
    for (std::size_t i = 0; i < n; ++i)
        if (lo[i] > hi[i])
            return;
    IntVector q(lo);
    while (true) {
        f(q);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (q[i] < hi[i]) {
                ++q[i];
                break;
            }
            q[i] = lo[i];
            if (i == 0)
                return;
        }
    }
}

IntVector as_exponent(const QVector& v) { return to_intvector(v); }

// 1 - z^a
LaurentPoly one_minus(const IntVector& a) {
    LaurentPoly p = LaurentPoly::constant(a.size(), YPoly(1));
    p.add_term(a, YPoly(-1));
    return p;
}

// 1 + y z^a
LaurentPoly one_plus_y_times(const IntVector& a) {
    LaurentPoly p = LaurentPoly::constant(a.size(), YPoly(1));
    p.add_term(a, YPoly::y());
    return p;
}

bool lex_negative(const IntVector& a) {
    for (auto x : a)
        if (x != 0)
            return x < 0;
    return false;
}

IntVector negated(IntVector a) {
    for (auto& x : a)
        x = -x;
    return a;
}

} // namespace

std::vector<LatticePoint> lattice_points(const Polytope& P) {
    auto [lo, hi] = P.integer_box();
    std::vector<LatticePoint> pts;
    for_each_in_box(lo, hi, [&](const IntVector& q) {
        if (auto c = face_codim(P, to_qvector(q)))
            pts.push_back({q, *c});
    });
    return pts;
}

YRational WeightedLatticeSum::multiplicity(const IntVector& alpha) const {
    return YRational(poly.coefficient(alpha), YPoly::one_plus_y().pow(static_cast<unsigned>(n)));
}

WeightedLatticeSum weighted_lattice_sum(const Polytope& P) {
    P.require_regular_integral("weighted lattice-point polynomial");
    WeightedLatticeSum s;
    s.n = P.dim();
    s.poly = LaurentPoly(s.n);
    s.points = lattice_points(P);
    for (const auto& lp : s.points)
        s.poly.add_term(lp.p, YPoly::one_plus_y().pow(static_cast<unsigned>(s.n) - static_cast<unsigned>(lp.codim)));
    return s;
}

Rational WeightedCount::at(const WeightParam& y) const {
    Rational total;
    for (std::size_t c = 0; c < by_codim.size(); ++c)
        total += Rational(by_codim[c]) * y.unflipped().pow(static_cast<long>(c));
    return total;
}

YRational WeightedCount::symbolic() const {
    YRational total;
    for (std::size_t c = 0; c < by_codim.size(); ++c)
        total += YRational(Rational(by_codim[c])) * YRational::weight(static_cast<unsigned>(c), 0);
    return total;
}

std::string WeightedCount::str() const {
    std::string out;
    for (std::size_t c = 0; c < by_codim.size(); ++c) {
        if (by_codim[c] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        std::string k = by_codim[c].get_str();
        if (c == 0)
            out += k;
        else if (c == 1)
            out += k + "/(1+y)";
        else
            out += k + "/(1+y)^" + std::to_string(c);
    }
    return out.empty() ? "0" : out;
}

WeightedCount weighted_count_symbolic(const Polytope& P) {
    P.require_regular_integral("weighted lattice-point count");
    WeightedCount wc;
    wc.by_codim.assign(P.dim() + 1, Integer(0));
    for (const auto& lp : lattice_points(P))
        wc.by_codim[static_cast<std::size_t>(lp.codim)] += 1;
    return wc;
}

Rational weighted_count(const Polytope& P, const WeightParam& y) { return weighted_count_symbolic(P).at(y); }

ConeGenFun cone_genfun(const Polytope& P, std::size_t vertex) {
    P.require_regular_integral("cone generating function");
    const auto& v = P.vertices().at(vertex);
    const std::size_t n = P.dim();
    LaurentPoly num = LaurentPoly::monomial(as_exponent(v.point));
    LaurentPoly den = LaurentPoly::constant(n, YPoly::one_plus_y().pow(static_cast<unsigned>(n)));
    for (const auto& a : v.edge_vectors) {
        IntVector e = as_exponent(a);
        num = num * one_plus_y_times(e);
        den = den * one_minus(e);
    }
    return {vertex, v.point, RationalFunction(std::move(num), std::move(den))};
}

RationalFunction sum_cone_genfuns_naive(const Polytope& P) {
    RationalFunction sum(LaurentPoly(P.dim()));
    for (std::size_t i = 0; i < P.vertices().size(); ++i)
        sum = sum + cone_genfun(P, i).ratfun;
    return sum;
}

BrionCheck brion_check(const Polytope& P) {
    P.require_regular_integral("Brion-type identity");
    const std::size_t n = P.dim();

    // Write 1/(1 - z^a) with a lex-negative as -z^{-a}/(1 - z^{-a}) so that all
    // denominators are products of 1 - z^b with b lex-positive.
    struct Term {
        LaurentPoly num;
        std::map<IntVector, int> factors;
    };
    std::vector<Term> terms;
    std::map<IntVector, int> lcm;
    for (const auto& v : P.vertices()) {
        Term t{LaurentPoly::monomial(as_exponent(v.point)), {}};
        for (const auto& a : v.edge_vectors) {
            IntVector e = as_exponent(a);
            t.num = t.num * one_plus_y_times(e);
            if (lex_negative(e)) {
                e = negated(std::move(e));
                t.num = -t.num.shifted(e);
            }
            ++t.factors[e];
        }
        for (const auto& [b, k] : t.factors)
            lcm[b] = std::max(lcm[b], k);
        terms.push_back(std::move(t));
    }

    LaurentPoly den = LaurentPoly::constant(n, YPoly::one_plus_y().pow(static_cast<unsigned>(n)));
    for (const auto& [b, k] : lcm)
        for (int i = 0; i < k; ++i)
            den = den * one_minus(b);

    LaurentPoly num(n);
    for (auto& t : terms) {
        LaurentPoly part = t.num;
        for (const auto& [b, k] : lcm) {
            auto it = t.factors.find(b);
            int have = it == t.factors.end() ? 0 : it->second;
            for (int i = have; i < k; ++i)
                part = part * one_minus(b);
        }
        num += part;
    }

    BrionCheck check{RationalFunction(std::move(num), std::move(den)), weighted_lattice_sum(P)};
    RationalFunction rhs(check.rhs.poly,
                         LaurentPoly::constant(n, YPoly::one_plus_y().pow(static_cast<unsigned>(n))));
    check.equal = check.lhs.equals(rhs);
    return check;
}

bool IntBox::contains(const IntVector& q) const {
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i] < lo[i] || q[i] > hi[i])
            return false;
    return true;
}

IntBox IntBox::inflated(std::int64_t by) const {
    IntBox b(*this);
    for (auto& x : b.lo)
        x -= by;
    for (auto& x : b.hi)
        x += by;
    return b;
}

IntBox lattice_box(const Polytope& P) {
    auto [lo, hi] = P.integer_box();
    return {lo, hi};
}

namespace {

// Calls f(q, weight) for every lattice point q = v + sum m_j g_j of the cone
// inside the box, m_j >= 0 integers. The cone generators must be a Z-basis.
void for_each_cone_point(const PolarizedCone& C, const IntBox& box,
                         const std::function<void(const IntVector&, const ConeWeight&)>& f) {
    const std::size_t n = C.apex.size();
    // upper bound for each m_j over the box corners
    IntVector mhi(n, 0);
    for (std::size_t corner = 0; corner < (std::size_t{1} << n); ++corner) {
        QVector q(n);
        for (std::size_t i = 0; i < n; ++i)
            q[i] = Rational(static_cast<long>((corner >> i) & 1u ? box.hi[i] : box.lo[i]));
        QVector m = cone_coordinates(C, q);
        for (std::size_t j = 0; j < n; ++j) {
            Integer fl;
            mpz_fdiv_q(fl.get_mpz_t(), m[j].num().get_mpz_t(), m[j].den().get_mpz_t());
            mhi[j] = std::max<std::int64_t>(mhi[j], fl.get_si());
        }
    }
    IntVector apex = to_intvector(C.apex);
    std::vector<IntVector> gens;
    for (const auto& g : C.generators)
        gens.push_back(to_intvector(g));
    for_each_in_box(IntVector(n, 0), mhi, [&](const IntVector& m) {
        IntVector q(apex);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                q[i] += m[j] * gens[j][i];
        if (!box.contains(q))
            return;
        ConeWeight w;
        for (std::size_t j = 0; j < n; ++j)
            if (m[j] == 0)
                ++(C.flipped[j] ? w.r2 : w.r1);
        f(q, w);
    });
}

} // namespace

std::map<IntVector, YRational> cone_series_sum(const Polytope& P, const PolarizingVector& xi, const IntBox& box) {
    P.require_regular_integral("polarized cone series");
    const auto n = static_cast<unsigned>(P.dim());
    std::map<IntVector, YPoly> cleared;
    for (const auto& C : polarize_cones(P, xi)) {
        for_each_cone_point(C, box, [&](const IntVector& q, const ConeWeight& w) {
            YPoly term = YPoly::y().pow(static_cast<unsigned>(w.r2)) *
                         YPoly::one_plus_y().pow(n - static_cast<unsigned>(w.codim()));
            cleared[q] += term * Rational(C.sign());
        });
    }
    std::map<IntVector, YRational> out;
    const YPoly denom = YPoly::one_plus_y().pow(n);
    for (auto& [q, c] : cleared)
        if (!c.is_zero())
            out.emplace(q, YRational(c, denom));
    return out;
}

std::map<IntVector, Rational> cone_series_sum(const Polytope& P, const PolarizingVector& xi, const IntBox& box,
                                              const WeightParam& y) {
    P.require_regular_integral("polarized cone series");
    std::map<IntVector, Rational> sums;
    for (const auto& C : polarize_cones(P, xi))
        for_each_cone_point(C, box, [&](const IntVector& q, const ConeWeight& w) {
            sums[q] += Rational(C.sign()) * w.value(y);
        });
    std::erase_if(sums, [](const auto& kv) { return kv.second.is_zero(); });
    return sums;
}

ChiYEval chi_y_eval(const Polytope& P, const WeightParam& y, const QVector& z) {
    P.require_regular_integral("chi_y evaluation");
    if (z.size() != P.dim())
        throw DomainError("z has " + std::to_string(z.size()) + " coordinates, expected " + std::to_string(P.dim()));
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i].is_zero())
            throw DomainError("z_" + std::to_string(i + 1) + " must be nonzero");

    auto power = [&](const QVector& e) {
        Rational r = 1;
        for (std::size_t i = 0; i < e.size(); ++i)
            r *= z[i].pow(e[i].num().get_si());
        return r;
    };
    const Rational one_plus_y = Rational(1) + y.y();

    ChiYEval r;
    for (const auto& v : P.vertices()) {
        Rational term = power(v.point);
        for (const auto& a : v.edge_vectors) {
            Rational za = power(a);
            if (za == Rational(1))
                throw DomainError("pole: z^a = 1 for edge vector a = " + str(a) + " at vertex " + str(v.point));
            term *= (Rational(1) + y.y() * za) / (one_plus_y * (Rational(1) - za));
        }
        r.lhs += term;
    }
    for (const auto& lp : lattice_points(P))
        r.rhs += y.unflipped().pow(lp.codim) * power(to_qvector(lp.p));
    r.equal = r.lhs == r.rhs;
    return r;
}

} // namespace wpd
