#pragma once

// Shared test helpers: seeded generators for random exact inputs and
// textbook oracles that deliberately avoid the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "lefschetz/matrix.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz::testing {

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t max_degree, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::vector<Integer> c(deg(rng) + 1);
    for (auto& x : c) x = dist(rng);
    return Polynomial(std::move(c));
}

/// Leibniz-formula determinant: sum over all permutations.
inline Rational leibniz_det(const Matrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// det(tI - M) by cofactor expansion along the first row, with polynomial
/// entries. Exponential time; only for small integer matrices.
inline Polynomial cofactor_char_poly(const std::vector<std::vector<Polynomial>>& e) {
    const std::size_t n = e.size();
    if (n == 0) return Polynomial{1};
    if (n == 1) return e[0][0];
    Polynomial total;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Polynomial>> sub;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(e[r][k]);
            sub.push_back(std::move(row));
        }
        Polynomial term = e[0][c] * cofactor_char_poly(sub);
        total = (c % 2 == 0) ? total + term : total - term;
    }
    return total;
}

inline Polynomial cofactor_char_poly(const Matrix& m) {
    std::vector<std::vector<Polynomial>> e(m.rows(), std::vector<Polynomial>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Polynomial entry = Polynomial::constant(-m(r, c).get_num());
            if (r == c) entry += Polynomial{0, 1};
            e[r][c] = entry;
        }
    return cofactor_char_poly(e);
}

/// Naive power by repeated multiplication with the serial reference product.
inline Matrix naive_power(const Matrix& a, std::size_t m) {
    Matrix p = Matrix::identity(a.rows());
    for (std::size_t i = 0; i < m; ++i) {
        Matrix next(a.rows(), a.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) {
                Rational s = 0;
                for (std::size_t k = 0; k < a.cols(); ++k) s += p(r, k) * a(k, c);
                next(r, c) = s;
            }
        p = next;
    }
    return p;
}

/// Moebius function by trial factorisation written independently of the
/// library: count prime factors, reject squares.
inline int brute_mobius(std::uint64_t m) {
    int k = 0;
    for (std::uint64_t p = 2; p <= m; ++p) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 1) return 0;
        ++k;
    }
    return k % 2 ? -1 : 1;
}

}  // namespace lefschetz::testing
