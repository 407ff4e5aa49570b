#include "wpd/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "wpd/errors.hpp"

namespace wpd {

Rational::Rational(const Integer& num, const Integer& den) : q_(num, den) {
    if (den == 0)
        throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text))
            throw InputError("not an integer or p/q rational literal: '" + std::string(text) + "'");
        return Rational(parse_integer(text));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw InputError("not an integer or p/q rational literal: '" + std::string(text) + "'");
    Integer d = parse_integer(den);
    if (d == 0)
        throw InputError("zero denominator in rational literal: '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

Rational Rational::inverse() const {
    if (is_zero())
        throw DomainError("division by zero");
    return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    if (digits < 0)
        digits = 0;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    // round half away from zero
    Integer n = ::abs(q_.get_num()) * scale * 2 + q_.get_den();
    Integer d = q_.get_den() * 2;
    Integer scaled;
    mpz_fdiv_q(scaled.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    std::string digits_str = scaled.get_str();
    if (static_cast<int>(digits_str.size()) <= digits)
        digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
    std::string out;
    if (sign() < 0 && scaled != 0)
        out += '-';
    out += digits_str.substr(0, digits_str.size() - static_cast<std::size_t>(digits));
    if (digits > 0)
        out += "." + digits_str.substr(digits_str.size() - static_cast<std::size_t>(digits));
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational dot(const QVector& a, const QVector& b) {
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

QVector operator+(const QVector& a, const QVector& b) {
    QVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

QVector operator-(const QVector& a, const QVector& b) {
    QVector r(a);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

QVector operator*(const Rational& s, const QVector& v) {
    QVector r(v);
    for (auto& x : r)
        x *= s;
    return r;
}

QVector operator-(const QVector& v) {
    QVector r(v);
    for (auto& x : r)
        x = -x;
    return r;
}

QVector to_qvector(const IntVector& v) {
    QVector r;
    r.reserve(v.size());
    for (auto x : v)
        r.emplace_back(static_cast<long long>(x));
    return r;
}

IntVector to_intvector(const QVector& v) {
    IntVector r;
    r.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_integer() || !x.num().fits_slong_p())
            throw DomainError("not a machine-size integer: " + x.str());
        r.push_back(x.num().get_si());
    }
    return r;
}

bool is_integral(const QVector& v) {
    for (const auto& x : v)
        if (!x.is_integer())
            return false;
    return true;
}

std::string str(const QVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

std::string str(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

} // namespace wpd
