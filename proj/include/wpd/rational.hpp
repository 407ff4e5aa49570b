#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace wpd {

using Integer = mpz_class;

/**
 * Exact rational number backed by GMP.
 *
 * Always stored in canonical form: gcd(|num|, den) = 1, den > 0, and zero is
 * 0/1. GMP arithmetic preserves the canonical form, so only the two-argument
 * constructor has to canonicalize.
 */
class Rational {
  public:
    Rational() = default;
    Rational(int v) : q_(v) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(Integer(std::to_string(v))) {}
    Rational(const Integer& v) : q_(v) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : q_(q) {}

    // Accepts "p", "-p", "p/q". Throws InputError on anything else.
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }
    const mpq_class& gmp() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // Integer exponent; negative exponents invert (throws DomainError on 0).
    Rational pow(long e) const;
    Rational inverse() const;
    Rational abs() const { return Rational(::abs(q_)); }

    // "p" or "p/q".
    std::string str() const;
    // Rounded decimal with `digits` fractional digits.
    std::string decimal(int digits) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

  private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>; // row-major
using IntVector = std::vector<std::int64_t>;

Rational dot(const QVector& a, const QVector& b);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& s, const QVector& v);
QVector operator-(const QVector& v);

QVector to_qvector(const IntVector& v);
// Throws DomainError if some entry is not an integer or does not fit in 64 bits.
IntVector to_intvector(const QVector& v);
bool is_integral(const QVector& v);

std::string str(const QVector& v);
std::string str(const IntVector& v);

} // namespace wpd
