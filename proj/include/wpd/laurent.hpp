#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "wpd/rational.hpp"
#include "wpd/ypoly.hpp"

namespace wpd {

/**
 * Sparse Laurent polynomial in z_1..z_n whose coefficients are polynomials in
 * the weight parameter y, i.e. an element of Q[y][z_1^{+-1}, ..., z_n^{+-1}].
 *
 * Terms are keyed by exponent vector; zero coefficients are never stored.
 */
class LaurentPoly {
  public:
    using Terms = std::map<IntVector, YPoly>;

    explicit LaurentPoly(std::size_t dim = 0) : dim_(dim) {}

    static LaurentPoly constant(std::size_t dim, const YPoly& c);
    static LaurentPoly monomial(const IntVector& exponent, const YPoly& c = YPoly(1));
    // The single variable z_i (0-based).
    static LaurentPoly variable(std::size_t dim, std::size_t i);

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    YPoly coefficient(const IntVector& exponent) const;

    // Adds c * z^exponent.
    void add_term(const IntVector& exponent, const YPoly& c);

    // Multiplies by the monomial z^shift.
    LaurentPoly shifted(const IntVector& shift) const;
    // Substitutes a rational value for y, leaving a polynomial with constant coefficients.
    LaurentPoly with_y(const Rational& y) const;

    // Exact value at z = point, y = y. A zero coordinate raised to a negative
    // power throws DomainError.
    Rational eval(const QVector& point, const Rational& y) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const YPoly& s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const YPoly& s) { return a *= s; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return a * YPoly(-1); }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

    std::string str() const;

  private:
    std::size_t dim_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/**
 * Quotient of two Laurent polynomials over Q[y].
 *
 * There is no canonical form: normalize() only strips a common monomial and
 * the common Q[y] content. Equality is decided by cross-multiplication.
 */
class RationalFunction {
  public:
    RationalFunction(LaurentPoly num, LaurentPoly den);
    explicit RationalFunction(const LaurentPoly& p);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    std::size_t dim() const { return num_.dim(); }

    RationalFunction normalized() const;

    // Throws DomainError when the denominator vanishes at the point.
    Rational eval(const QVector& point, const Rational& y) const;

    // True iff num * other.den == other.num * den.
    bool equals(const RationalFunction& other) const;
    bool equals(const LaurentPoly& p) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a);

    std::string str() const;

  private:
    LaurentPoly num_;
    LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

} // namespace wpd
