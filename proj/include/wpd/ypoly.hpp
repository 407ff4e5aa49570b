#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wpd/rational.hpp"

namespace wpd {

/// Univariate polynomial in the weight parameter y with rational coefficients.
/// Coefficients are stored lowest degree first with no trailing zeros, so the
/// zero polynomial has an empty coefficient list.
class YPoly {
  public:
    YPoly() = default;
    YPoly(const Rational& c);
    YPoly(int c) : YPoly(Rational(c)) {}
    explicit YPoly(std::vector<Rational> coeffs);

    static YPoly y() { return YPoly(std::vector<Rational>{0, 1}); }
    static YPoly one_plus_y() { return YPoly(std::vector<Rational>{1, 1}); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& y) const;
    YPoly pow(unsigned e) const;

    YPoly& operator+=(const YPoly& o);
    YPoly& operator-=(const YPoly& o);
    YPoly& operator*=(const YPoly& o);
    YPoly& operator*=(const Rational& s);

    friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
    friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
    friend YPoly operator*(YPoly a, const YPoly& b) { return a *= b; }
    friend YPoly operator*(YPoly a, const Rational& s) { return a *= s; }
    friend YPoly operator-(const YPoly& a) { return a * Rational(-1); }
    friend bool operator==(const YPoly& a, const YPoly& b) { return a.c_ == b.c_; }

    // Euclidean division; throws DomainError when dividing by zero.
    static void divmod(const YPoly& a, const YPoly& b, YPoly& q, YPoly& r);
    // Monic gcd (zero if both are zero).
    static YPoly gcd(YPoly a, YPoly b);

    // e.g. "3*y^2 - y + 1/2"
    std::string str(const std::string& var = "y") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const YPoly& p);

/// Rational function in y, kept in lowest terms with a monic denominator.
class YRational {
  public:
    YRational() : den_(1) {}
    YRational(const Rational& c) : num_(c), den_(1) {}
    YRational(int c) : YRational(Rational(c)) {}
    YRational(const YPoly& p) : num_(p), den_(1) {}
    YRational(YPoly num, YPoly den);

    // (1/(1+y))^r1 * (y/(1+y))^r2
    static YRational weight(unsigned r1, unsigned r2);

    const YPoly& num() const { return num_; }
    const YPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    // Throws DomainError if y is a pole.
    Rational eval(const Rational& y) const;

    YRational& operator+=(const YRational& o);
    YRational& operator-=(const YRational& o);
    YRational& operator*=(const YRational& o);
    YRational& operator/=(const YRational& o);

    friend YRational operator+(YRational a, const YRational& b) { return a += b; }
    friend YRational operator-(YRational a, const YRational& b) { return a -= b; }
    friend YRational operator*(YRational a, const YRational& b) { return a *= b; }
    friend YRational operator/(YRational a, const YRational& b) { return a /= b; }
    friend YRational operator-(const YRational& a) { return YRational(-a.num_, a.den_); }
    friend bool operator==(const YRational& a, const YRational& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string str() const;

  private:
    void normalize();
    YPoly num_;
    YPoly den_;
};

std::ostream& operator<<(std::ostream& os, const YRational& r);

} // namespace wpd
