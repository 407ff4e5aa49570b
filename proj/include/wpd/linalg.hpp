#pragma once

#include <optional>
#include <vector>

#include "wpd/rational.hpp"

namespace wpd {

// Exact Gaussian elimination. Returns std::nullopt when A is singular;
// a singular system is an ordinary outcome, not an error.
std::optional<QVector> solve_linear(const QMatrix& A, const QVector& b);

Rational determinant(QMatrix A);
std::size_t rank(QMatrix A);

// Basis of {x : A x = 0}; A has `cols` columns (needed when A has no rows).
std::vector<QVector> nullspace(const QMatrix& A, std::size_t cols);

// Inverse of a square matrix, or std::nullopt if singular.
std::optional<QMatrix> inverse(const QMatrix& A);

QMatrix transpose(const QMatrix& A);
QVector multiply(const QMatrix& A, const QVector& x);

// The integer vector c*v, c > 0, whose entries have gcd 1.
// Throws DomainError for the zero vector.
std::vector<Integer> primitive(const QVector& v);

} // namespace wpd
