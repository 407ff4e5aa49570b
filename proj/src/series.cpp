#include "wpd/series.hpp"

#include "wpd/errors.hpp"

namespace wpd {

namespace {

// (1 - e^{-s x}) / (s x) = sum_k (-s x)^k / (k+1)!
template <typename Coeff>
TruncatedSeries<Coeff> one_minus_exp_over_x(std::size_t K, const Coeff& s) {
    TruncatedSeries<Coeff> r(K);
    Coeff term(1); // (-s)^k / (k+1)!
    for (std::size_t k = 0; k <= K; ++k) {
        r[k] = term;
        term = term * (-s) * Coeff(Rational(1, static_cast<long>(k + 2)));
    }
    return r;
}

// Q(y, x) for a coefficient type that can hold y.
template <typename Coeff>
TruncatedSeries<Coeff> hirzebruch(const Coeff& y, std::size_t K) {
    Coeff s = Coeff(1) + y;
    // x s / (1 - e^{-x s}) is the inverse of (1 - e^{-s x})/(s x)
    auto q = one_minus_exp_over_x(K, s).inverse();
    return q - y * TruncatedSeries<Coeff>::x(K);
}

template <typename Coeff>
TruncatedSeries<Coeff> lift(const Series& s) {
    std::vector<Coeff> c;
    for (const auto& x : s.coeffs())
        c.push_back(Coeff(x));
    return TruncatedSeries<Coeff>(s.order(), std::move(c));
}

} // namespace

Series todd_series(std::size_t K) { return one_minus_exp_over_x(K, Rational(1)).inverse(); }

Series lhat_series(std::size_t K) {
    Series sinh_over(K), cosh_s(K);
    // sinh(x/2)/(x/2) = sum (x/2)^{2k}/(2k+1)!, cosh(x/2) = sum (x/2)^{2k}/(2k)!
    Rational fact = 1;
    for (std::size_t k = 0; k <= K + 1; ++k) {
        if (k > 0)
            fact *= Rational(static_cast<long>(k));
        if (k % 2 == 0 && k <= K)
            cosh_s[k] = Rational(1, 2).pow(static_cast<long>(k)) / fact;
        if (k % 2 == 1 && k - 1 <= K)
            sinh_over[k - 1] = Rational(1, 2).pow(static_cast<long>(k - 1)) / fact;
    }
    return cosh_s * sinh_over.inverse();
}

Series hirzebruch_series(const Rational& y, std::size_t K) {
    WeightParam checked(y);
    return hirzebruch(checked.y(), K);
}

YSeries hirzebruch_series_symbolic(std::size_t K) { return hirzebruch(YRational(YPoly::y()), K); }

Series qy_series(const WeightParam& y, std::size_t K) {
    return hirzebruch_series(y.y(), K).scaled(y.unflipped());
}

YSeries qy_series_symbolic(std::size_t K) {
    YRational inv = YRational(1) / YRational(YPoly::one_plus_y());
    return hirzebruch_series_symbolic(K).scaled(inv);
}

std::vector<IdentityCheck> verify_identities(std::size_t K) {
    if (K < 2)
        throw DomainError("series identities need order K >= 2");
    std::vector<IdentityCheck> out;
    auto record = [&](std::string name, bool ok) { out.push_back({std::move(name), ok}); };

    const Series todd = todd_series(K);
    const Series todd_neg = todd.scaled(Rational(-1));
    const Series exp_neg = Series::exp(K, Rational(-1));
    const Series lhat = lhat_series(K);

    record("Todd(x) * (1 - e^-x)/x = 1", todd * one_minus_exp_over_x(K, Rational(1)) == Series::one(K));
    record("Todd(-x) = e^-x Todd(x)", todd_neg == exp_neg * todd);
    record("(Todd(x) + Todd(-x))/2 = (x/2)/tanh(x/2)", Rational(1, 2) * (todd + todd_neg) == lhat);
    record("(x/2)/tanh(x/2) is even", [&] {
        for (std::size_t k = 1; k <= K; k += 2)
            if (!lhat[k].is_zero())
                return false;
        return true;
    }());

    const YRational y(YPoly::y());
    const YRational s = YRational(1) + y;
    const YRational a = YRational(1) / s; // 1/(1+y)
    const YRational b = y / s;            // y/(1+y)
    const YSeries Q = hirzebruch_series_symbolic(K);
    const YSeries Qy = qy_series_symbolic(K);
    const YSeries ytodd = lift<YRational>(todd);
    const YSeries ytodd_neg = lift<YRational>(todd_neg);
    const YSeries yexp_neg = YSeries::exp(K, YRational(-1));
    const YSeries x = YSeries::x(K);

    // x (1 + y e^{-x(1+y)}) / (1 - e^{-x(1+y)})
    {
        YSeries e = YSeries::exp(K, -s);
        YSeries x_over = a * one_minus_exp_over_x(K, s).inverse(); // x/(1 - e^{-sx})
        record("Q(y,x) = x(1 + y e^{-x(1+y)})/(1 - e^{-x(1+y)})", Q == (YSeries::one(K) + y * e) * x_over);
    }
    record("Q(y,x) = Todd(x(1+y))/(1+y) + y Todd(-x(1+y))/(1+y)",
           Q == a * ytodd.scaled(s) + b * ytodd_neg.scaled(s));
    record("Q_y(x) = Todd(x)(1 + y e^-x)/(1+y)", Qy == a * (ytodd * (YSeries::one(K) + y * yexp_neg)));
    record("Q_y(x) = Todd(x)/(1+y) + y Todd(-x)/(1+y)", Qy == a * ytodd + b * ytodd_neg);
    record("Q(0,x) = Todd(x)", hirzebruch_series(0, K) == todd);
    record("Q_0(x) = Todd(x)", qy_series(WeightParam(0), K) == todd);
    record("Q(1,x/2) = (x/2)/tanh(x/2)", hirzebruch_series(1, K).scaled(Rational(1, 2)) == lhat);
    record("Q_1(x) = (x/2)/tanh(x/2)", qy_series(WeightParam(1), K) == lhat);
    record("Q(y,x) + yx = Todd(x(1+y))", Q + y * x == ytodd.scaled(s));
    return out;
}

} // namespace wpd
