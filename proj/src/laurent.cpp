#include "wpd/laurent.hpp"

#include <algorithm>
#include <ostream>

#include "wpd/errors.hpp"

namespace wpd {

LaurentPoly LaurentPoly::constant(std::size_t dim, const YPoly& c) {
    LaurentPoly p(dim);
    p.add_term(IntVector(dim, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const IntVector& exponent, const YPoly& c) {
    LaurentPoly p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t dim, std::size_t i) {
    IntVector e(dim, 0);
    e[i] = 1;
    return monomial(e);
}

YPoly LaurentPoly::coefficient(const IntVector& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? YPoly() : it->second;
}

void LaurentPoly::add_term(const IntVector& exponent, const YPoly& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::shifted(const IntVector& shift) const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_) {
        IntVector f(e);
        for (std::size_t i = 0; i < dim_; ++i)
            f[i] += shift[i];
        r.terms_.emplace(std::move(f), c);
    }
    return r;
}

LaurentPoly LaurentPoly::with_y(const Rational& y) const {
    LaurentPoly r(dim_);
    for (const auto& [e, c] : terms_)
        r.add_term(e, YPoly(c.eval(y)));
    return r;
}

Rational LaurentPoly::eval(const QVector& point, const Rational& y) const {
    Rational total;
    for (const auto& [e, c] : terms_) {
        Rational term = c.eval(y);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (e[i] == 0)
                continue;
            if (e[i] < 0 && point[i].is_zero())
                throw DomainError("z_" + std::to_string(i + 1) + " = 0 raised to a negative power");
            term *= point[i].pow(e[i]);
        }
        total += term;
    }
    return total;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const YPoly& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_)
        c *= s;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.dim_);
    IntVector e(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.dim_; ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    // highest exponents first reads more naturally
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "z" + std::to_string(i + 1);
            if (e[i] != 1)
                mono += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
        }
        std::string coeff = c.str();
        bool compound = c.degree() > 0 && c.coeffs().size() > 1 &&
                        std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                      [](const Rational& x) { return !x.is_zero(); }) > 1;
        std::string term;
        if (mono.empty())
            term = compound ? "(" + coeff + ")" : coeff;
        else if (c == YPoly(1))
            term = mono;
        else if (c == YPoly(-1))
            term = "-" + mono;
        else
            term = (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
        if (out.empty())
            out = term;
        else if (term.front() == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DomainError("rational function with zero denominator");
}

RationalFunction::RationalFunction(const LaurentPoly& p)
    : num_(p), den_(LaurentPoly::constant(p.dim(), YPoly(1))) {}

RationalFunction RationalFunction::normalized() const {
    const std::size_t n = dim();
    if (num_.is_zero())
        return RationalFunction(LaurentPoly(n), LaurentPoly::constant(n, YPoly(1)));

    // Strip the monomial z^m with m the componentwise minimum exponent of the
    // denominator, so the denominator becomes a polynomial not divisible by any z_i.
    IntVector m = den_.terms().begin()->first;
    for (const auto& [e, c] : den_.terms())
        for (std::size_t i = 0; i < n; ++i)
            m[i] = std::min(m[i], e[i]);
    for (auto& x : m)
        x = -x;
    LaurentPoly num = num_.shifted(m);
    LaurentPoly den = den_.shifted(m);

    // Common content in Q[y].
    YPoly g;
    for (const auto* p : {&num, &den})
        for (const auto& [e, c] : p->terms())
            g = YPoly::gcd(g, c);
    auto divide = [&](const LaurentPoly& p) {
        LaurentPoly r(n);
        for (const auto& [e, c] : p.terms()) {
            YPoly q, rem;
            YPoly::divmod(c, g, q, rem);
            r.add_term(e, q);
        }
        return r;
    };
    if (g.degree() > 0) {
        num = divide(num);
        den = divide(den);
    }
    // Make the leading coefficient of the top denominator term monic.
    Rational lead = den.terms().rbegin()->second.leading().inverse();
    num *= YPoly(lead);
    den *= YPoly(lead);
    return RationalFunction(std::move(num), std::move(den));
}

Rational RationalFunction::eval(const QVector& point, const Rational& y) const {
    Rational d = den_.eval(point, y);
    if (d.is_zero())
        throw DomainError("rational function evaluated at a pole");
    return num_.eval(point, y) / d;
}

bool RationalFunction::equals(const RationalFunction& other) const {
    return num_ * other.den_ == other.num_ * den_;
}

bool RationalFunction::equals(const LaurentPoly& p) const { return num_ == p * den_; }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_)
        return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }

std::string RationalFunction::str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

} // namespace wpd
