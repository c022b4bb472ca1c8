#include "lefschetz/kernels.hpp"

#include <algorithm>

#include "lefschetz/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lefschetz::kernels {

namespace {

// Below this many multiply-adds the thread start-up cost dominates.
constexpr std::size_t kParallelWork = 4096;

void check_product_shape(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw PreconditionError("matrix product shape mismatch");
}

// Row i of a*b, integer fast path. mpz arithmetic avoids the gcd work that
// every mpq operation performs.
void product_row_integral(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i, std::vector<Integer>& acc) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        const Integer& x = aik.get_num();
        for (std::size_t j = 0; j < b.cols(); ++j) {
            const Rational& bkj = b(k, j);
            if (bkj == 0) continue;
            mpz_addmul(acc[j].get_mpz_t(), x.get_mpz_t(), bkj.get_num_mpz_t());
        }
    }
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = Rational(acc[j]);
}

void product_row_rational(const Matrix& a, const Matrix& b, Matrix& c, std::size_t i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
}

Rational minor(const Matrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    return determinant(a.submatrix(rows, cols));
}

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        // Rightmost position that can still advance.
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

Rational determinant(Matrix m) {
    if (!m.is_square()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        const Rational p = m(col, col);
        det *= p;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == 0) continue;
            const Rational factor = m(r, col) / p;
            for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
        }
    }
    return det;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    check_product_shape(a, b);
    Matrix c(a.rows(), b.cols());
    const std::size_t work = a.rows() * a.cols() * b.cols();
    const bool integral = a.is_integral() && b.is_integral();
    const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel if (work >= kParallelWork)
    {
        std::vector<Integer> acc(integral ? b.cols() : 0);
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < rows; ++i) {
            if (integral)
                product_row_integral(a, b, c, static_cast<std::size_t>(i), acc);
            else
                product_row_rational(a, b, c, static_cast<std::size_t>(i));
        }
    }
    return c;
}

Matrix compound(const Matrix& a, std::size_t k) {
    const auto row_sets = combinations(a.rows(), k);
    const auto col_sets = combinations(a.cols(), k);
    Matrix out(row_sets.size(), col_sets.size());
    const auto n_rows = static_cast<std::ptrdiff_t>(row_sets.size());
    const std::size_t work = row_sets.size() * col_sets.size() * k * k * k;
#pragma omp parallel for schedule(dynamic) if (work >= kParallelWork)
    for (std::ptrdiff_t r = 0; r < n_rows; ++r) {
        const auto ri = static_cast<std::size_t>(r);
        for (std::size_t c = 0; c < col_sets.size(); ++c) out(ri, c) = minor(a, row_sets[ri], col_sets[c]);
    }
    return out;
}

std::vector<Matrix> powers(const Matrix& a, std::size_t m_max) {
    if (!a.is_square()) throw PreconditionError("powers of a non-square matrix");
    std::vector<Matrix> out;
    out.reserve(m_max);
    if (m_max == 0) return out;
    out.push_back(a);
    for (std::size_t m = 2; m <= m_max; ++m) out.push_back(multiply(out.back(), a));
    return out;
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_num_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(std::max(1, n));
#else
    (void)n;
#endif
}

namespace reference {

Matrix multiply(const Matrix& a, const Matrix& b) {
    check_product_shape(a, b);
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rational sum = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) sum += a(i, k) * b(k, j);
            c(i, j) = sum;
        }
    return c;
}

Matrix compound(const Matrix& a, std::size_t k) {
    const auto row_sets = combinations(a.rows(), k);
    const auto col_sets = combinations(a.cols(), k);
    Matrix out(row_sets.size(), col_sets.size());
    for (std::size_t r = 0; r < row_sets.size(); ++r)
        for (std::size_t c = 0; c < col_sets.size(); ++c) out(r, c) = minor(a, row_sets[r], col_sets[c]);
    return out;
}

std::vector<Matrix> powers(const Matrix& a, std::size_t m_max) {
    if (!a.is_square()) throw PreconditionError("powers of a non-square matrix");
    std::vector<Matrix> out;
    if (m_max == 0) return out;
    out.push_back(a);
    for (std::size_t m = 2; m <= m_max; ++m) out.push_back(multiply(out.back(), a));
    return out;
}

}  // namespace reference

}  // namespace lefschetz::kernels
