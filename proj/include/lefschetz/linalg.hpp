#pragma once

#include <cstddef>
#include <vector>

#include "lefschetz/matrix.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz {

Rational determinant(const Matrix& m);

/// Coefficients (ascending) of det(tI - M) over Q, via similarity reduction
/// to upper Hessenberg form. Monic of degree n; the 0x0 matrix gives [1].
std::vector<Rational> char_poly_rational(const Matrix& m);

/// det(tI - M) as an integer polynomial. For integer M this is the monic
/// characteristic polynomial; otherwise the rational one scaled to a
/// primitive integer polynomial with positive leading coefficient.
Polynomial char_poly(const Matrix& m);

/// det(I - tM) for an integer matrix M (the reversed characteristic
/// polynomial); constant term 1.
Polynomial det_one_minus_t(const Matrix& m);

/// trace(M^m) by repeated squaring of M; m >= 1.
Rational trace_power(const Matrix& m, std::size_t power);

/// trace(M^m) for m = 1..m_max from the characteristic polynomial via
/// Newton's identities (the linear recurrence of Cayley-Hamilton beyond n).
std::vector<Rational> power_sums(const Matrix& m, std::size_t m_max);

/// Single value of power_sums.
Rational trace_power_newton(const Matrix& m, std::size_t power);

/// k-th exterior power (compound matrix) of a square n x n matrix,
/// 0 <= k <= n. Rows and columns are indexed by ascending k-tuples in
/// lexicographic order; Lambda^0 = [1], Lambda^1 = A.
Matrix exterior_power(const Matrix& a, std::size_t k);

/// Compound matrix of a possibly rectangular r x c matrix: C(r,k) x C(c,k).
Matrix compound_matrix(const Matrix& a, std::size_t k);

}  // namespace lefschetz
