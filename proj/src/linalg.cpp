#include "wpd/linalg.hpp"

#include <utility>

#include "wpd/errors.hpp"

namespace wpd {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& M, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < M.size(); ++col) {
        std::size_t p = row;
        while (p < M.size() && M[p][col].is_zero())
            ++p;
        if (p == M.size())
            continue;
        std::swap(M[p], M[row]);
        Rational inv = M[row][col].inverse();
        for (auto& x : M[row])
            x *= inv;
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == row || M[r][col].is_zero())
                continue;
            Rational f = M[r][col];
            for (std::size_t c = col; c < M[r].size(); ++c)
                M[r][c] -= f * M[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::optional<QVector> solve_linear(const QMatrix& A, const QVector& b) {
    const std::size_t n = A.size();
    QMatrix M(n);
    for (std::size_t i = 0; i < n; ++i) {
        M[i] = A[i];
        M[i].push_back(b[i]);
    }
    auto pivots = rref(M, n);
    if (pivots.size() < n)
        return std::nullopt;
    QVector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = M[i][n];
    return x;
}

Rational determinant(QMatrix A) {
    const std::size_t n = A.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && A[p][col].is_zero())
            ++p;
        if (p == n)
            return Rational(0);
        if (p != col) {
            std::swap(A[p], A[col]);
            det = -det;
        }
        det *= A[col][col];
        Rational inv = A[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (A[r][col].is_zero())
                continue;
            Rational f = A[r][col] * inv;
            for (std::size_t c = col; c < n; ++c)
                A[r][c] -= f * A[col][c];
        }
    }
    return det;
}

std::size_t rank(QMatrix A) {
    if (A.empty())
        return 0;
    return rref(A, A.front().size()).size();
}

std::vector<QVector> nullspace(const QMatrix& A, std::size_t cols) {
    QMatrix M(A);
    auto pivots = rref(M, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        QVector v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -M[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QMatrix> inverse(const QMatrix& A) {
    const std::size_t n = A.size();
    QMatrix M(n);
    for (std::size_t i = 0; i < n; ++i) {
        M[i] = A[i];
        M[i].resize(2 * n);
        M[i][n + i] = 1;
    }
    if (rref(M, n).size() < n)
        return std::nullopt;
    QMatrix inv(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = M[i][n + j];
    return inv;
}

QMatrix transpose(const QMatrix& A) {
    if (A.empty())
        return {};
    QMatrix T(A.front().size(), QVector(A.size()));
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A[i].size(); ++j)
            T[j][i] = A[i][j];
    return T;
}

QVector multiply(const QMatrix& A, const QVector& x) {
    QVector r(A.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        r[i] = dot(A[i], x);
    return r;
}

std::vector<Integer> primitive(const QVector& v) {
    Integer l = 1;
    bool nonzero = false;
    for (const auto& x : v) {
        nonzero = nonzero || !x.is_zero();
        l = lcm(l, x.den());
    }
    if (!nonzero)
        throw DomainError("primitive vector of the zero vector");
    std::vector<Integer> w;
    w.reserve(v.size());
    Integer g = 0;
    for (const auto& x : v) {
        w.push_back(x.num() * (l / x.den()));
        g = gcd(g, w.back());
    }
    for (auto& x : w)
        x /= g;
    return w;
}

} // namespace wpd
