#include "wpd/ypoly.hpp"

#include <ostream>
#include <utility>

#include "wpd/errors.hpp"

namespace wpd {

YPoly::YPoly(const Rational& c) {
    if (!c.is_zero())
        c_.push_back(c);
}

YPoly::YPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void YPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational YPoly::eval(const Rational& y) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * y + *it;
    return acc;
}

YPoly YPoly::pow(unsigned e) const {
    YPoly result(1), base(*this);
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

YPoly& YPoly::operator+=(const YPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

YPoly& YPoly::operator*=(const YPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

YPoly& YPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= s;
    return *this;
}

void YPoly::divmod(const YPoly& a, const YPoly& b, YPoly& q, YPoly& r) {
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    r = a;
    q = YPoly();
    if (a.degree() < b.degree())
        return;
    std::vector<Rational> qc(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    Rational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        auto shift = static_cast<std::size_t>(r.degree() - b.degree());
        Rational f = r.leading() * lead_inv;
        qc[shift] = f;
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            r.c_[i + shift] -= f * b.c_[i];
        r.trim();
    }
    q = YPoly(std::move(qc));
}

YPoly YPoly::gcd(YPoly a, YPoly b) {
    while (!b.is_zero()) {
        YPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero())
        a *= a.leading().inverse();
    return a;
}

std::string YPoly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero())
            continue;
        Rational mag = c.abs();
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        bool unit = mag == Rational(1);
        if (k == 0 || !unit)
            out += mag.str();
        if (k > 0) {
            if (!unit)
                out += "*";
            out += var;
            if (k > 1)
                out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const YPoly& p) { return os << p.str(); }

YRational::YRational(YPoly num, YPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DomainError("rational function of y with zero denominator");
    normalize();
}

YRational YRational::weight(unsigned r1, unsigned r2) {
    return YRational(YPoly::y().pow(r2), YPoly::one_plus_y().pow(r1 + r2));
}

void YRational::normalize() {
    if (num_.is_zero()) {
        den_ = YPoly(1);
        return;
    }
    YPoly g = YPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        YPoly q, r;
        YPoly::divmod(num_, g, q, r);
        num_ = q;
        YPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    Rational lead = den_.leading().inverse();
    num_ *= lead;
    den_ *= lead;
}

Rational YRational::eval(const Rational& y) const {
    Rational d = den_.eval(y);
    if (d.is_zero())
        throw DomainError("y = " + y.str() + " is a pole of " + str());
    return num_.eval(y) / d;
}

YRational& YRational::operator+=(const YRational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

YRational& YRational::operator-=(const YRational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

YRational& YRational::operator*=(const YRational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

YRational& YRational::operator/=(const YRational& o) {
    if (o.is_zero())
        throw DomainError("division by the zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string YRational::str() const {
    if (den_ == YPoly(1))
        return num_.str();
    auto wrap = [](const YPoly& p) {
        int terms = 0;
        for (const auto& c : p.coeffs())
            terms += !c.is_zero();
        bool bare = terms == 1 && p.leading().is_integer() && p.leading().sign() > 0;
        return bare ? p.str() : "(" + p.str() + ")";
    };
    return wrap(num_) + "/" + wrap(den_);
}

std::ostream& operator<<(std::ostream& os, const YRational& r) { return os << r.str(); }

} // namespace wpd
