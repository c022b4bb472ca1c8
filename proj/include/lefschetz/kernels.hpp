#pragma once

// Data-parallel exact kernels. Each kernel has an OpenMP implementation in
// `kernels` and a plain serial twin in `kernels::reference`; the two must
// return identical results and are cross-checked by the test suite and
// compared by the benchmark target.

#include <cstddef>
#include <vector>

#include "lefschetz/matrix.hpp"

namespace lefschetz::kernels {

/// All k-element subsets of {0, ..., n-1} as ascending index tuples, in
/// lexicographic order. choose(n, 0) is {{}}; k > n gives no subsets.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// Binomial coefficient as a machine integer (small arguments only).
std::size_t binomial(std::size_t n, std::size_t k);

/// Determinant by fraction-controlled Gaussian elimination over Q.
Rational determinant(Matrix m);

Matrix multiply(const Matrix& a, const Matrix& b);

/// k-th compound matrix of an r x c matrix: the C(r,k) x C(c,k) matrix of
/// k x k minors, rows and columns indexed by lexicographic k-subsets.
Matrix compound(const Matrix& a, std::size_t k);

/// a, a^2, ..., a^m_max (element i holds a^(i+1)).
std::vector<Matrix> powers(const Matrix& a, std::size_t m_max);

/// Worker count OpenMP will use (1 when built without OpenMP).
int max_threads();
void set_num_threads(int n);

namespace reference {

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix compound(const Matrix& a, std::size_t k);
std::vector<Matrix> powers(const Matrix& a, std::size_t m_max);

}  // namespace reference

}  // namespace lefschetz::kernels
