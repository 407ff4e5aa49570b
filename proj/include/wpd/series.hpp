#pragma once

#include <string>
#include <vector>

#include "wpd/rational.hpp"
#include "wpd/weights.hpp"
#include "wpd/ypoly.hpp"

namespace wpd {

/// Power series in x truncated after x^K. All arithmetic truncates at the
/// order of the left operand. `Coeff` is Rational or YRational.
template <typename Coeff>
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, Coeff(0)) {}
    TruncatedSeries(std::size_t order, std::vector<Coeff> coeffs) : c_(std::move(coeffs)) {
        c_.resize(order + 1, Coeff(0));
    }

    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = Coeff(1);
        return s;
    }
    // x itself
    static TruncatedSeries x(std::size_t order) {
        TruncatedSeries s(order);
        if (order >= 1)
            s.c_[1] = Coeff(1);
        return s;
    }
    // exp(scale * x)
    static TruncatedSeries exp(std::size_t order, const Coeff& scale) {
        TruncatedSeries s(order);
        Coeff term(1);
        for (std::size_t k = 0; k <= order; ++k) {
            s.c_[k] = term;
            term = term * scale * Coeff(Rational(1, static_cast<long>(k + 1)));
        }
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const Coeff& operator[](std::size_t k) const { return c_[k]; }
    Coeff& operator[](std::size_t k) { return c_[k]; }
    const std::vector<Coeff>& coeffs() const { return c_; }

    // f(s x): coefficient k scaled by s^k.
    TruncatedSeries scaled(const Coeff& s) const {
        TruncatedSeries r(*this);
        Coeff p(1);
        for (auto& c : r.c_) {
            c = c * p;
            p = p * s;
        }
        return r;
    }

    // 1/f; requires an invertible constant term.
    TruncatedSeries inverse() const {
        TruncatedSeries r(order());
        Coeff inv0 = Coeff(1) / c_[0];
        r.c_[0] = inv0;
        for (std::size_t k = 1; k <= order(); ++k) {
            Coeff acc(0);
            for (std::size_t j = 1; j <= k; ++j)
                acc = acc + c_[j] * r.c_[k - j];
            r.c_[k] = -(acc * inv0);
        }
        return r;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        for (std::size_t k = 0; k <= a.order() && k <= b.order(); ++k)
            a.c_[k] = a.c_[k] + b.c_[k];
        return a;
    }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        for (std::size_t k = 0; k <= a.order() && k <= b.order(); ++k)
            a.c_[k] = a.c_[k] - b.c_[k];
        return a;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i)
            for (std::size_t j = 0; i + j <= a.order() && j <= b.order(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        return r;
    }
    friend TruncatedSeries operator*(const Coeff& s, TruncatedSeries a) {
        for (auto& c : a.c_)
            c = s * c;
        return a;
    }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  private:
    std::vector<Coeff> c_;
};

using Series = TruncatedSeries<Rational>;
using YSeries = TruncatedSeries<YRational>;

// x/(1 - e^{-x}) by inverting (1 - e^{-x})/x.
Series todd_series(std::size_t K);
// (x/2)/tanh(x/2) = (x/2) cosh(x/2) / sinh(x/2).
Series lhat_series(std::size_t K);
// Q(y, x) = x(1+y)/(1 - e^{-x(1+y)}) - yx.
Series hirzebruch_series(const Rational& y, std::size_t K);
YSeries hirzebruch_series_symbolic(std::size_t K);
// Q_y(x) = Q(y, x/(1+y)).
Series qy_series(const WeightParam& y, std::size_t K);
YSeries qy_series_symbolic(std::size_t K);

struct IdentityCheck {
    std::string name;
    bool holds = false;
};

// Checks the classical relations between the four series coefficientwise up
// to order K (K >= 2), with y symbolic where y appears.
std::vector<IdentityCheck> verify_identities(std::size_t K);

} // namespace wpd
